// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"
#include "bcf/parameters.hpp"
#include "bcf/poly.hpp"
#include "bcf/rational_function.hpp"

namespace bcf {

/// 2x2 matrix of real polynomials acting by w -> (a w + b) / (c w + d).
struct LftMatrix {
  Poly<Rational> a, b, c, d;

  static LftMatrix identity() {
    return {Poly<Rational>::constant(1), Poly<Rational>(), Poly<Rational>(), Poly<Rational>::constant(1)};
  }

  /// [[s t u, -t u - s], [t u, -1]] with u = z - x. Applied to h it gives
  /// s + 1/(1/(t u) - h).
  static LftMatrix augmentation_factor(const Rational& s, const Rational& t, const Rational& x) {
    Poly<Rational> tu = Poly<Rational>::linear(Rational(-t * x), t);
    return {tu * s, -tu - Poly<Rational>::constant(s), tu, Poly<Rational>::constant(-1)};
  }

  Poly<Rational> det() const { return a * d - b * c; }

  friend LftMatrix operator*(const LftMatrix& l, const LftMatrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const LftMatrix&, const LftMatrix&) = default;
};

/// Closed form of (a h + b)/(c h + d) for rational h.
template <class T>
RationalFunction<T> lft_apply(const LftMatrix& m, const RationalFunction<T>& h) {
  RationalFunction<T> hf = h.folded();
  auto a = poly_cast<T>(m.a), b = poly_cast<T>(m.b), c = poly_cast<T>(m.c), d = poly_cast<T>(m.d);
  Poly<T> num = a * hf.num() + b * hf.den();
  Poly<T> den = c * hf.num() + d * hf.den();
  if (den.is_zero()) throw Error(ErrorCode::DegenerateLft, "transformed denominator vanishes identically");
  return RationalFunction<T>(std::move(num), std::move(den));
}

/// Pointwise (a h + b)/(c h + d) for an arbitrary evaluator h.
template <class C>
std::function<C(const C&)> lft_apply(const LftMatrix& m, std::function<C(const C&)> h) {
  return [m, h = std::move(h)](const C& z) {
    C w = h(z);
    C den = m.c.evaluate<C>(z) * w + m.d.evaluate<C>(z);
    return (m.a.evaluate<C>(z) * w + m.b.evaluate<C>(z)) / den;
  };
}

/// s + 1/(1/(t (z - x)) - h), the augmentation of h at x by (s, t).
template <class T>
RationalFunction<T> augment(const RationalFunction<T>& h, const Rational& s, const Rational& t, const Rational& x) {
  if (sgn(t) <= 0) throw Error(ErrorCode::InvalidAugmentation, "augmentation needs t > 0, got " + to_string(t));
  return lft_apply(LftMatrix::augmentation_factor(s, t, x), h);
}

// ---------------------------------------------------------------------------
// Continued fractions.

/// The innermost function of the fraction.
struct ConstantTail {
  ComplexRational value;
};
struct RationalTail {
  RationalFunction<ComplexRational> h;
};
/// s + 1/(1/(t (z - x)) - h), the tail shape required for even n.
struct AugmentedTail {
  Rational s;
  Rational t;
  RationalFunction<ComplexRational> h;
};
/// std::monostate marks a free tail that is only known pointwise.
using TailDescriptor = std::variant<std::monostate, ConstantTail, RationalTail, AugmentedTail>;

struct ContinuedFraction {
  Rational x{0};
  std::vector<Rational> s;
  std::vector<Rational> t;
  TailDescriptor tail;
};

namespace detail {

// Active depth and the constant that replaces the tail when some t_j = 0.
struct CfShape {
  std::size_t depth;
  std::optional<Rational> terminal;
};

inline CfShape cf_shape(const ContinuedFraction& cf) {
  if (cf.s.size() != cf.t.size()) throw Error(ErrorCode::InvalidTail, "s and t have different lengths");
  for (std::size_t j = 0; j < cf.t.size(); ++j) {
    int sign = sgn(cf.t[j]);
    if (sign < 0) throw Error(ErrorCode::InvalidAugmentation, "t_" + std::to_string(j + 1) + " is negative");
    if (sign == 0) return {j, cf.s[j]};
  }
  return {cf.t.size(), std::nullopt};
}

}  // namespace detail

/// Closed form of s_1 + 1/(1/(t_1 u) - (s_2 + ... )) with the given tail.
inline RationalFunction<ComplexRational> build_continued_fraction(const ContinuedFraction& cf) {
  auto shape = detail::cf_shape(cf);
  RationalFunction<ComplexRational> f;
  if (shape.terminal) {
    f = RationalFunction<ComplexRational>::constant(*shape.terminal);
  } else if (const auto* c = std::get_if<ConstantTail>(&cf.tail)) {
    f = RationalFunction<ComplexRational>::constant(c->value);
  } else if (const auto* r = std::get_if<RationalTail>(&cf.tail)) {
    f = r->h;
  } else if (const auto* g = std::get_if<AugmentedTail>(&cf.tail)) {
    if (sgn(g->t) <= 0) throw Error(ErrorCode::InvalidTail, "augmented tail needs t > 0");
    f = augment(g->h, g->s, g->t, cf.x);
  } else {
    throw Error(ErrorCode::InvalidTail, "free tail has no closed form; use the evaluator");
  }
  for (std::size_t j = shape.depth; j-- > 0;) f = augment(f, cf.s[j], cf.t[j], cf.x);
  return f;
}

/// Pointwise evaluator of the fraction with an arbitrary tail function h.
/// A closed-form tail in the descriptor takes precedence over h.
template <class C>
std::function<C(const C&)> continued_fraction_evaluator(const ContinuedFraction& cf, std::function<C(const C&)> h = {}) {
  auto shape = detail::cf_shape(cf);
  if (shape.terminal || !std::holds_alternative<std::monostate>(cf.tail)) {
    auto f = build_continued_fraction(cf);
    return [f](const C& z) { return f.template evaluate<C>(z); };
  }
  if (!h) throw Error(ErrorCode::InvalidTail, "free tail needs a function");
  LftMatrix chain = LftMatrix::identity();
  for (std::size_t j = 0; j < shape.depth; ++j) chain = chain * LftMatrix::augmentation_factor(cf.s[j], cf.t[j], cf.x);
  return lft_apply<C>(chain, std::move(h));
}

/// A_1 A_2 ... A_depth over the active levels of the table.
inline LftMatrix compose_lft_chain(const ParameterTable& params, const Rational& x) {
  LftMatrix chain = LftMatrix::identity();
  for (std::size_t j = 0; j < params.depth; ++j) chain = chain * LftMatrix::augmentation_factor(params.s[j], params.t[j], x);
  return chain;
}

}  // namespace bcf

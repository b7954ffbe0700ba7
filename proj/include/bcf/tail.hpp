// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"
#include "bcf/poly.hpp"
#include "bcf/rational_function.hpp"

namespace bcf {

/// Closed-form Pick functions used to pick one member of a solution family.
///
///   const:c          h(z) = c, Im c >= 0
///   affine:a,b       h(z) = a z + b, a >= 0, b real
///   mobius:p,q       h(z) = -1/(z - p) + q, p and q real
///
/// A suffix ";t=v" sets the free augmentation constant (v > 0) used when the
/// number of targets is odd (n even).
struct Tail {
  enum class Kind { Constant, Affine, Mobius };
  Kind kind = Kind::Constant;
  ComplexRational value;
  Rational alpha{0}, beta{0};
  Rational pole{0}, shift{0};
  std::optional<Rational> augment_t;

  static Tail constant(ComplexRational c) {
    Tail t;
    t.value = std::move(c);
    return t;
  }
  static Tail affine(Rational a, Rational b) {
    Tail t;
    t.kind = Kind::Affine;
    t.alpha = std::move(a);
    t.beta = std::move(b);
    return t;
  }
  static Tail mobius(Rational p, Rational q) {
    Tail t;
    t.kind = Kind::Mobius;
    t.pole = std::move(p);
    t.shift = std::move(q);
    return t;
  }

  void validate() const {
    switch (kind) {
      case Kind::Constant:
        if (sgn(value.im()) < 0) throw Error(ErrorCode::InvalidTail, "constant tail needs Im c >= 0");
        break;
      case Kind::Affine:
        if (sgn(alpha) < 0) throw Error(ErrorCode::InvalidTail, "affine tail needs a >= 0");
        break;
      case Kind::Mobius:
        break;
    }
    if (augment_t && sgn(*augment_t) <= 0) throw Error(ErrorCode::InvalidTail, "t must be positive");
  }

  RationalFunction<ComplexRational> function() const {
    validate();
    using P = Poly<ComplexRational>;
    switch (kind) {
      case Kind::Constant: return RationalFunction<ComplexRational>::constant(value);
      case Kind::Affine: return {P::linear(beta, alpha), P::constant(1)};
      case Kind::Mobius: return {P::constant(shift), P::constant(1), pole, Rational(-1)};
    }
    throw Error(ErrorCode::InvalidTail, "unknown tail kind");
  }

  friend bool operator==(const Tail&, const Tail&) = default;
};

inline std::string to_string(const Tail& t) {
  std::string s;
  switch (t.kind) {
    case Tail::Kind::Constant: s = "const:" + to_string(t.value); break;
    case Tail::Kind::Affine: s = "affine:" + to_string(t.alpha) + "," + to_string(t.beta); break;
    case Tail::Kind::Mobius: s = "mobius:" + to_string(t.pole) + "," + to_string(t.shift); break;
  }
  if (t.augment_t) s += ";t=" + to_string(*t.augment_t);
  return s;
}

inline Tail parse_tail(std::string_view text) {
  std::string s(text);
  std::optional<Rational> aug;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    std::string opt = s.substr(semi + 1);
    s.resize(semi);
    if (opt.rfind("t=", 0) != 0) throw Error(ErrorCode::InvalidTail, "unknown tail option '" + opt + "'");
    auto v = try_parse_rational(opt.substr(2));
    if (!v) throw Error(ErrorCode::InvalidTail, "bad tail option '" + opt + "'");
    aug = *v;
  }
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidTail, "tail must look like kind:args, got '" + s + "'");
  std::string kind = s.substr(0, colon), args = s.substr(colon + 1);
  std::vector<std::string> parts;
  for (std::size_t start = 0;;) {
    auto comma = args.find(',', start);
    parts.push_back(args.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  auto rational_arg = [&](std::size_t k) {
    auto v = try_parse_rational(parts[k]);
    if (!v) throw Error(ErrorCode::InvalidTail, "bad tail argument '" + parts[k] + "'");
    return *v;
  };
  Tail t;
  if (kind == "const" && parts.size() == 1) {
    auto v = try_parse_complex(parts[0]);
    if (!v) throw Error(ErrorCode::InvalidTail, "bad tail argument '" + parts[0] + "'");
    t = Tail::constant(*v);
  } else if (kind == "affine" && parts.size() == 2) {
    t = Tail::affine(rational_arg(0), rational_arg(1));
  } else if (kind == "mobius" && parts.size() == 2) {
    t = Tail::mobius(rational_arg(0), rational_arg(1));
  } else {
    throw Error(ErrorCode::InvalidTail, "unknown tail '" + std::string(text) + "'");
  }
  t.augment_t = aug;
  t.validate();
  return t;
}

}  // namespace bcf

// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"
#include "bcf/poly.hpp"
#include "bcf/series.hpp"

namespace bcf {

/// f(z) = num(z)/den(z) + pole_residue/(z - pole_node).
///
/// The quotient is kept in lowest terms with a monic denominator. The pole
/// term is stored apart from the quotient and is absent when the residue is 0.
template <class T>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly<T>::constant(T(1))) {}
  RationalFunction(Poly<T> num, Poly<T> den, Rational pole_node = Rational(0), Rational pole_residue = Rational(0))
      : num_(std::move(num)), den_(std::move(den)), pole_node_(std::move(pole_node)), pole_residue_(std::move(pole_residue)) {
    if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational function with zero denominator");
    if (sgn(pole_residue_) > 0) throw Error(ErrorCode::InvalidArgument, "pole residue must be non-positive");
    if (sgn(pole_residue_) == 0) pole_node_ = 0;
    reduce();
  }

  static RationalFunction constant(const T& c) { return RationalFunction(Poly<T>::constant(c), Poly<T>::constant(T(1))); }

  const Poly<T>& num() const { return num_; }
  const Poly<T>& den() const { return den_; }
  const Rational& pole_node() const { return pole_node_; }
  const Rational& pole_residue() const { return pole_residue_; }
  bool has_pole_term() const { return sgn(pole_residue_) != 0; }

  /// max(deg num, deg den) of the reduced quotient, plus one for a pole term.
  int degree() const { return std::max(num_.degree(), den_.degree()) + (has_pole_term() ? 1 : 0); }

  /// Same function with the pole term merged into the quotient.
  RationalFunction folded() const {
    if (!has_pole_term()) return *this;
    Poly<T> lin = Poly<T>::linear(T(Rational(-pole_node_)), T(1));
    return RationalFunction(num_ * lin + den_ * T(pole_residue_), den_ * lin);
  }

  /// Same function with the pole term removed.
  RationalFunction analytic_part() const { return RationalFunction(num_, den_); }

  template <class C>
  C evaluate(const C& z) const {
    C v = num_.template evaluate<C>(z) / den_.template evaluate<C>(z);
    if (has_pole_term()) v += to_complex<C>(pole_residue_) / (z - to_complex<C>(pole_node_));
    return v;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_ && a.pole_node_ == b.pole_node_ && a.pole_residue_ == b.pole_residue_;
  }

 private:
  void reduce() {
    Poly<T> g = gcd(num_, den_);
    if (num_.is_zero()) {
      den_ = Poly<T>::constant(T(1));
      return;
    }
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    T lead = den_.leading();
    if (!(lead == T(1))) {
      T inv = T(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly<T> num_;
  Poly<T> den_;
  Rational pole_node_{0};
  Rational pole_residue_{0};
};

template <class T>
RationalFunction<ComplexRational> to_complex_rf(const RationalFunction<T>& f) {
  if constexpr (std::is_same_v<T, ComplexRational>) {
    return f;
  } else {
    return RationalFunction<ComplexRational>(poly_cast<ComplexRational>(f.num()), poly_cast<ComplexRational>(f.den()),
                                             f.pole_node(), f.pole_residue());
  }
}

/// Laurent data at a point: the coefficient of (z - x)^{-1} and the Taylor
/// coefficients of the remainder.
template <class T>
struct LaurentData {
  T residue{0};
  TruncatedSeries<T> taylor;
};

/// Expansion in u = z - x through order N. A pole term located at x is
/// reported as the residue; one located elsewhere is expanded.
template <class T>
LaurentData<T> laurent_at(const RationalFunction<T>& f, const Rational& x, std::size_t order) {
  Poly<T> num = f.num().shifted(T(x));
  Poly<T> den = f.den().shifted(T(x));
  if (is_zero(den.coeff(0))) throw Error(ErrorCode::PoleAtNode, "denominator vanishes at " + to_string(x));
  std::vector<T> dc(order + 1, T(0)), nc(order + 1, T(0));
  for (std::size_t k = 0; k <= order; ++k) {
    dc[k] = den.coeff(k);
    nc[k] = num.coeff(k);
  }
  std::vector<T> inv = series_reciprocal<T>(dc, order);
  LaurentData<T> out;
  out.taylor = TruncatedSeries<T>{x, series_multiply<T>(nc, inv, order)};
  if (f.has_pole_term()) {
    if (f.pole_node() == x) {
      out.residue = T(f.pole_residue());
    } else {
      // r/(u + d) = sum_k r (-1)^k u^k / d^{k+1}, d = x - p
      Rational d = x - f.pole_node();
      Rational term = f.pole_residue() / d;
      for (std::size_t k = 0; k <= order; ++k) {
        out.taylor.coeffs[k] += T(term);
        term = -term / d;
      }
    }
  }
  return out;
}

/// Taylor coefficients of f at x; a pole term at x is not included.
template <class T>
TruncatedSeries<T> taylor_at(const RationalFunction<T>& f, const Rational& x, std::size_t order) {
  return laurent_at(f, x, order).taylor;
}

}  // namespace bcf

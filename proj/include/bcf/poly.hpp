// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"

namespace bcf {

/// Polynomial in z with exact coefficients, lowest degree first. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  /// a0 + a1 z
  static Poly linear(const T& a0, const T& a1) { return Poly(std::vector<T>{a0, a1}); }
  static Poly monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return c_.back();
  }

  T operator()(const T& z) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  /// Floating evaluation for sampling.
  template <class C>
  C evaluate(const C& z) const {
    C acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + to_complex<C>(c_[k]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Poly(std::move(d));
  }

  /// p(z + shift), by repeated synthetic division.
  Poly shifted(const T& shift) const {
    std::vector<T> c = c_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
    return Poly(std::move(c));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= T(-1); }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (bcf::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && bcf::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Quotient and remainder of a by b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    T f = r[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (T(1) / a.leading());
}

template <class To, class From>
Poly<To> poly_cast(const Poly<From>& p) {
  std::vector<To> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(To(v));
  return Poly<To>(std::move(c));
}

}  // namespace bcf

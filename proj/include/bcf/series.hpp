// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"

namespace bcf {

/// Index of the first non-real term; nullopt encodes "infinity".
using Rho = std::optional<std::size_t>;

/// Least k >= 0 with Im a^k != 0, or infinity when every term is real.
inline Rho rho(std::span<const ComplexRational> a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_real()) return k;
  return std::nullopt;
}

/// Taylor coefficients c_0..c_N of a function about base_point. Coefficients
/// past index N are unknown, not zero.
template <class T>
struct TruncatedSeries {
  Rational base_point{0};
  std::vector<T> coeffs;

  std::size_t order() const {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "empty series has no order");
    return coeffs.size() - 1;
  }
  const T& operator[](std::size_t k) const { return coeffs[k]; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Data of a boundary interpolation problem at a real node: L_{-1} = a_neg1
/// and L_k = a[k] for k = 0..n.
struct ProblemData {
  Rational x{0};
  std::optional<ComplexRational> a_neg1;
  std::vector<ComplexRational> a;

  std::size_t n() const {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "problem has no targets");
    return a.size() - 1;
  }
  ComplexRational residue() const { return a_neg1.value_or(ComplexRational(0)); }

  std::vector<Rational> real_targets() const {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& v : a) {
      if (!v.is_real()) throw Error(ErrorCode::NonRealEntry, "target " + to_string(v) + " is not real");
      out.push_back(v.re());
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Truncated power series arithmetic on coefficient vectors.

template <class T>
std::vector<T> series_multiply(std::span<const T> a, std::span<const T> b, std::size_t order) {
  std::vector<T> c(order + 1, T(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// Reciprocal series through the given order; a[0] must be nonzero.
template <class T>
std::vector<T> series_reciprocal(std::span<const T> a, std::size_t order) {
  if (a.empty() || is_zero(a[0])) throw Error(ErrorCode::InvalidArgument, "series reciprocal needs a nonzero constant term");
  std::vector<T> r(order + 1, T(0));
  r[0] = T(1) / a[0];
  for (std::size_t k = 1; k <= order; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

/// f(g(v)) through the given order, for g with zero constant term.
template <class T>
std::vector<T> series_compose(std::span<const T> f, std::span<const T> g, std::size_t order) {
  if (!g.empty() && !is_zero(g[0])) throw Error(ErrorCode::InvalidArgument, "inner series must vanish at the origin");
  std::vector<T> out(order + 1, T(0));
  std::vector<T> power(order + 1, T(0));
  power[0] = T(1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j > 0) power = series_multiply<T>(power, g, order);
    if (is_zero(f[j])) continue;
    for (std::size_t k = 0; k <= order; ++k) out[k] += f[j] * power[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Julia reduction and augmentation at the coefficient level.

/// Coefficients of g = -1/(f - f_0) + 1/(f_1 u), obtained from the lower
/// triangular Toeplitz system (f_1, f_2, ...) * g = (f_2, f_3, ...) / f_1.
/// Order N input gives order N-2 output.
template <class T>
TruncatedSeries<T> reduce_series(const TruncatedSeries<T>& f) {
  const std::size_t order = f.order();
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "reduction needs a series of order at least 2");
  const T& f1 = f.coeffs[1];
  if (is_zero(f1)) throw Error(ErrorCode::DegenerateDerivative, "first derivative vanishes at the node");
  TruncatedSeries<T> g{f.base_point, std::vector<T>(order - 1, T(0))};
  for (std::size_t j = 0; j + 2 <= order; ++j) {
    T acc = f.coeffs[j + 2] / f1;
    for (std::size_t k = 1; k <= j; ++k) acc -= f.coeffs[k + 1] * g.coeffs[j - k];
    g.coeffs[j] = acc / f1;
  }
  return g;
}

/// Coefficients of a0 + 1/(1/(a1 u) - g(u)) through order N = order(g) + 2.
template <class T>
TruncatedSeries<T> augment_series(const TruncatedSeries<T>& g, const Rational& a0, const Rational& a1) {
  if (sgn(a1) <= 0) throw Error(ErrorCode::InvalidAugmentation, "augmentation needs a1 > 0, got " + to_string(a1));
  const std::size_t order = g.order() + 2;
  // a0 + a1 u / (1 - a1 u g(u))
  std::vector<T> denom(order, T(0));
  denom[0] = T(1);
  for (std::size_t k = 0; k + 1 < order; ++k) denom[k + 1] = -T(a1) * g.coeffs[k];
  std::vector<T> inv = series_reciprocal<T>(denom, order - 1);
  TruncatedSeries<T> f{g.base_point, std::vector<T>(order + 1, T(0))};
  f.coeffs[0] = T(a0);
  for (std::size_t j = 1; j <= order; ++j) f.coeffs[j] = T(a1) * inv[j - 1];
  return f;
}

/// Problem data with the simple-pole coefficient split off.
struct PoleSplit {
  ComplexRational residue;
  ProblemData analytic;
};

/// Separates L_{-1} from the Taylor targets. The residue is returned as given;
/// admissibility (real and non-positive) is decided by the solver.
inline PoleSplit split_pole(const ProblemData& p) {
  ProblemData analytic = p;
  analytic.a_neg1.reset();
  return {p.residue(), std::move(analytic)};
}

}  // namespace bcf

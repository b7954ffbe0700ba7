// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/matrix.hpp"
#include "bcf/number.hpp"

namespace bcf {

/// H_m(a) with (i, j) entry a^{i+j-1}, i, j = 1..m.
struct HankelMatrix {
  std::size_t m = 0;
  RationalMatrix entries;
};

enum class HankelClass {
  PositiveDefinite,
  SEMinimallyPositive,
  PositiveSingularNotSEMinimal,
  NotPositive,
};

constexpr std::string_view to_string(HankelClass c) {
  switch (c) {
    case HankelClass::PositiveDefinite: return "positive_definite";
    case HankelClass::SEMinimallyPositive: return "se_minimally_positive";
    case HankelClass::PositiveSingularNotSEMinimal: return "positive_singular_not_se_minimal";
    case HankelClass::NotPositive: return "not_positive";
  }
  return "unknown";
}

struct Classification {
  HankelClass tag = HankelClass::PositiveDefinite;
  std::size_t rank = 0;
  std::vector<Rational> leading_minors;

  bool positive() const { return tag != HankelClass::NotPositive; }
};

/// Builds H_m from a sequence indexed from 0; entries a[1]..a[2m-1] are used.
inline HankelMatrix build_hankel(std::span<const Rational> a, std::size_t m) {
  if (m > 0 && a.size() < 2 * m) throw Error(ErrorCode::InvalidArgument, "not enough terms for H_" + std::to_string(m));
  HankelMatrix h{m, RationalMatrix(m, m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h.entries(i, j) = a[i + j + 1];
  return h;
}

inline HankelMatrix build_hankel(std::span<const ComplexRational> a, std::size_t m) {
  if (m > 0 && a.size() < 2 * m) throw Error(ErrorCode::InvalidArgument, "not enough terms for H_" + std::to_string(m));
  std::vector<Rational> re;
  re.reserve(2 * m);
  re.emplace_back(0);
  for (std::size_t k = 1; k < 2 * m; ++k) {
    if (!a[k].is_real())
      throw Error(ErrorCode::NonRealEntry, "Hankel entry a^" + std::to_string(k) + " = " + to_string(a[k]) + " is not real");
    re.push_back(a[k].re());
  }
  return build_hankel(std::span<const Rational>(re), m);
}

/// Exact positive-semidefiniteness of a symmetric rational matrix, by
/// symmetric elimination on positive diagonal pivots.
inline bool is_psd_exact(const RationalMatrix& h) {
  if (!h.symmetric()) throw Error(ErrorCode::InvalidArgument, "PSD test needs a symmetric matrix");
  RationalMatrix a = h;
  const std::size_t n = a.rows();
  std::vector<bool> live(n, true);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!live[i]) continue;
      int s = sgn(a(i, i));
      if (s < 0) return false;
      if (s > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // Every remaining diagonal is zero, so the block must vanish entirely.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (live[i] && live[j] && sgn(a(i, j)) != 0) return false;
      return true;
    }
    live[pivot] = false;
    const Rational d = a(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (!live[i] || is_zero(a(i, pivot))) continue;
      Rational f = a(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (live[j]) a(i, j) -= f * a(pivot, j);
    }
  }
  return true;
}

inline std::vector<Rational> leading_minors(const RationalMatrix& h) {
  std::vector<Rational> d;
  d.reserve(h.rows());
  for (std::size_t k = 1; k <= h.rows(); ++k) d.push_back(determinant(h.leading(k)));
  return d;
}

/// Classifies a symmetric matrix. SE-minimality is decided as: PSD and the
/// last standard basis vector is outside the column space.
inline Classification classify(const RationalMatrix& h) {
  Classification c;
  c.leading_minors = leading_minors(h);
  const std::size_t m = h.rows();
  if (m == 0) return c;
  c.rank = rank_exact(h);
  if (!is_psd_exact(h)) {
    c.tag = HankelClass::NotPositive;
  } else if (c.rank == m) {
    c.tag = HankelClass::PositiveDefinite;
  } else {
    RationalMatrix aug(m, m + 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) aug(i, j) = h(i, j);
    aug(m - 1, m) = 1;
    c.tag = rank_exact(aug) > c.rank ? HankelClass::SEMinimallyPositive : HankelClass::PositiveSingularNotSEMinimal;
  }
  return c;
}

inline Classification classify(const HankelMatrix& h) { return classify(h.entries); }

/// D - C a11^{-1} B for the partition with a 1x1 leading block.
inline RationalMatrix schur_complement_11(const RationalMatrix& h) {
  if (!h.square() || h.rows() == 0) throw Error(ErrorCode::InvalidArgument, "Schur complement needs a nonempty square matrix");
  if (is_zero(h(0, 0))) throw Error(ErrorCode::SingularPivot, "leading entry is zero");
  const std::size_t n = h.rows() - 1;
  RationalMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = h(i + 1, j + 1) - h(i + 1, 0) * h(0, j + 1) / h(0, 0);
  return s;
}

/// n x n lower triangular Toeplitz matrix with first column c[0..n-1].
inline RationalMatrix lower_toeplitz(std::span<const Rational> c, std::size_t n) {
  if (c.size() < n) throw Error(ErrorCode::InvalidArgument, "not enough Toeplitz coefficients");
  RationalMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) t(i, j) = c[i - j];
  return t;
}

}  // namespace bcf

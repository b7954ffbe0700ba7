// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "bcf/hankel.hpp"
#include "bcf/series.hpp"
#include "oracles.hpp"

namespace bcf {
namespace {

using testing::Rng;

RationalMatrix M(std::initializer_list<std::initializer_list<Rational>> rows) { return RationalMatrix(rows); }

HankelMatrix hankel_of(std::initializer_list<long> a, std::size_t m) {
  std::vector<Rational> v;
  for (long x : a) v.emplace_back(x);
  return build_hankel(std::span<const Rational>(v), m);
}

const RationalMatrix kCounterexample = M({{1, 1, 1}, {1, 1, 1}, {1, 1, 2}});

TEST(BuildHankel, CounterexampleMatrix) { EXPECT_EQ(hankel_of({0, 1, 1, 1, 1, 2}, 3).entries, kCounterexample); }

TEST(BuildHankel, Identity) { EXPECT_EQ(hankel_of({0, 1, 0, 1}, 2).entries, M({{1, 0}, {0, 1}})); }

TEST(BuildHankel, OneByOne) { EXPECT_EQ(hankel_of({0, 7}, 1).entries, M({{7}})); }

TEST(BuildHankel, EmptyMatrix) {
  auto h = hankel_of({0}, 0);
  EXPECT_EQ(h.m, 0u);
  EXPECT_TRUE(h.entries.empty());
  EXPECT_EQ(classify(h).tag, HankelClass::PositiveDefinite);
}

TEST(BuildHankel, NonRealEntryIsRejected) {
  std::vector<ComplexRational> a{0, 1, ComplexRational(0, 1), 1};
  try {
    build_hankel(std::span<const ComplexRational>(a), 2);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRealEntry);
  }
}

TEST(BuildHankel, HankelStructure) {
  auto h = hankel_of({9, 1, 2, 3, 4, 5, 6, 7}, 4).entries;
  EXPECT_TRUE(h.symmetric());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h(i, j), Rational(static_cast<long>(i + j + 1)));
}

TEST(Classify, Counterexample) {
  auto c = classify(kCounterexample);
  EXPECT_EQ(c.tag, HankelClass::PositiveSingularNotSEMinimal);
  EXPECT_EQ(c.rank, 2u);
}

TEST(Classify, SEMinimal) {
  auto c = classify(M({{1, 0}, {0, 0}}));
  EXPECT_EQ(c.tag, HankelClass::SEMinimallyPositive);
  EXPECT_EQ(c.rank, 1u);
}

TEST(Classify, PositiveDefinite) {
  auto c = classify(M({{1, 0}, {0, 1}}));
  EXPECT_EQ(c.tag, HankelClass::PositiveDefinite);
  EXPECT_EQ(c.rank, 2u);
}

TEST(Classify, Indefinite) { EXPECT_EQ(classify(M({{0, 1}, {1, 0}})).tag, HankelClass::NotPositive); }

TEST(Classify, ZeroMatrixIsSEMinimal) {
  auto c = classify(RationalMatrix(3, 3));
  EXPECT_EQ(c.tag, HankelClass::SEMinimallyPositive);
  EXPECT_EQ(c.rank, 0u);
}

TEST(SchurComplement, Examples) {
  EXPECT_EQ(schur_complement_11(M({{1, 1}, {1, 2}})), M({{1}}));
  EXPECT_EQ(schur_complement_11(M({{2, 2}, {2, 2}})), M({{0}}));
  EXPECT_EQ(schur_complement_11(M({{1, 2, 3}, {2, 5, 8}, {3, 8, 14}})), M({{1, 2}, {2, 5}}));
}

TEST(SchurComplement, ZeroPivotIsRejected) {
  try {
    schur_complement_11(M({{0, 1}, {1, 0}}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularPivot);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_exact(M({{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank_exact(RationalMatrix(3, 3)), 0u);
  EXPECT_EQ(rank_exact(kCounterexample), 2u);
}

TEST(LeadingMinors, Examples) {
  EXPECT_EQ(leading_minors(M({{1, 0}, {0, 1}})), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(leading_minors(M({{1, 1}, {1, 1}})), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(leading_minors(kCounterexample), (std::vector<Rational>{1, 0, 0}));
}

// Random symmetric Hankel matrices, biased toward singular and PSD cases by
// building some of them from sums of rank-one moment vectors.
RationalMatrix random_hankel(Rng& rng, std::size_t m) {
  std::vector<Rational> a(2 * m, Rational(0));
  switch (rng.integer(0, 2)) {
    case 0:
      for (std::size_t k = 1; k < 2 * m; ++k) a[k] = rng.integer(-3, 3);
      break;
    default: {
      // sum of w_j (1, x_j, x_j^2, ...) gives a PSD Hankel matrix of rank <= #terms
      long terms = rng.integer(1, static_cast<long>(m));
      for (long t = 0; t < terms; ++t) {
        Rational w = rng.positive(2, 1), x = rng.integer(-1, 1), p = w;
        for (std::size_t k = 1; k < 2 * m; ++k) {
          a[k] += p;
          p *= x;
        }
      }
      if (rng.integer(0, 1) == 1) a[2 * m - 1] += rng.integer(-1, 1);
    }
  }
  return build_hankel(std::span<const Rational>(a), m).entries;
}

TEST(Classify, AgreesWithPrincipalMinorsAndEpsilonProbe) {
  Rng rng(21);
  int se_minimal = 0, singular_not_se = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto h = random_hankel(rng, static_cast<std::size_t>(rng.integer(1, 5)));
    auto c = classify(h);
    EXPECT_EQ(c.positive(), testing::psd_by_principal_minors(h));
    EXPECT_EQ(c.rank, testing::rank_by_minors(h));
    EXPECT_EQ(c.tag == HankelClass::SEMinimallyPositive, testing::se_minimal_by_epsilon(h));
    EXPECT_EQ(c.tag == HankelClass::PositiveDefinite, c.positive() && c.rank == h.rows());
    if (c.tag == HankelClass::SEMinimallyPositive) {
      ++se_minimal;
      EXPECT_LT(c.rank, h.rows());
    }
    if (c.tag == HankelClass::PositiveSingularNotSEMinimal) ++singular_not_se;
    for (std::size_t k = 0; k < h.rows(); ++k) EXPECT_EQ(c.leading_minors[k], testing::laplace_det(h.leading(k + 1)));
  }
  EXPECT_GT(se_minimal, 10);
  EXPECT_GT(singular_not_se, 5);
}

TEST(HankelIdentity, CongruenceAndDeterminantChain) {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    TruncatedSeries<Rational> f;
    for (std::size_t k = 0; k <= 2 * n + 1; ++k) f.coeffs.push_back(rng.rational(5));
    f.coeffs[1] = rng.nonzero(5);
    auto g = reduce_series(f);
    RationalMatrix hf = build_hankel(std::span<const Rational>(f.coeffs), n + 1).entries;
    RationalMatrix hg = build_hankel(std::span<const Rational>(g.coeffs), n).entries;
    std::vector<Rational> tail(f.coeffs.begin() + 1, f.coeffs.end());
    RationalMatrix t = lower_toeplitz(std::span<const Rational>(tail), n);
    EXPECT_EQ(schur_complement_11(hf), t * hg * t.transpose());
    Rational scale(1);
    for (std::size_t k = 0; k < 2 * n + 1; ++k) scale *= f.coeffs[1];
    EXPECT_EQ(determinant(hf), scale * determinant(hg));
  }
}

TEST(Determinant, MatchesLaplace) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.integer(-2, 2);
    EXPECT_EQ(determinant(a), testing::laplace_det(a));
    EXPECT_EQ(rank_exact(a), testing::rank_by_minors(a));
  }
}

}  // namespace
}  // namespace bcf

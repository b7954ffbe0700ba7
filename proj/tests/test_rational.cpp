// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <complex>

#include "bcf/hankel.hpp"
#include "bcf/lft.hpp"
#include "bcf/rational_function.hpp"
#include "oracles.hpp"

namespace bcf {
namespace {

using testing::Rng;
using P = Poly<Rational>;
using RF = RationalFunction<Rational>;
using CRF = RationalFunction<ComplexRational>;

const P z = P::linear(0, 1);

CRF c(const RF& f) { return to_complex_rf(f); }

TEST(Poly, NormalizesTrailingZeros) {
  P p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_TRUE((P{0, 0}).is_zero());
  EXPECT_EQ(P().degree(), -1);
}

TEST(Poly, ArithmeticAndEvaluation) {
  P p{1, 1};  // 1 + z
  EXPECT_EQ(p * p, (P{1, 2, 1}));
  EXPECT_EQ(p * p - p, (P{0, 1, 1}));
  EXPECT_EQ((p * p)(Rational(2)), Rational(9));
  EXPECT_EQ((P{1, 2, 1}).derivative(), (P{2, 2}));
  EXPECT_EQ((P{0, 0, 1}).shifted(Rational(3)), (P{9, 6, 1}));
}

TEST(Poly, DivmodAndGcd) {
  auto [q, r] = divmod(P{-1, 0, 1}, P{-1, 1});
  EXPECT_EQ(q, (P{1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P{-1, 0, 1}, P{2, 2}), (P{1, 1}));
  EXPECT_EQ(gcd(P{1, 1}, P{2, 1}), (P{1}));
}

TEST(RationalFunction, LowestTermsWithMonicDenominator) {
  RF f(P{-1, 0, 1}, P{-2, 2});  // (z^2 - 1)/(2z - 2) = (z + 1)/2
  EXPECT_EQ(f.num(), (P{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(f.den(), (P{1}));
  EXPECT_EQ(f.degree(), 1);
}

TEST(RationalFunction, DegreeCountsPoleTerm) {
  RF f(z, P{1}, 0, -1);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.folded(), RF(P{-1, 0, 1}, z));
}

TEST(RationalFunction, PositiveResidueIsRejected) { EXPECT_THROW(RF(z, P{1}, 0, 1), Error); }

TEST(RationalFunction, ZeroDenominatorIsRejected) { EXPECT_THROW(RF(z, P()), Error); }

TEST(TaylorAt, Geometric) {
  RF f(z, P{1, -1});
  EXPECT_EQ(taylor_at(f, 0, 3).coeffs, (std::vector<Rational>{0, 1, 1, 1}));
}

TEST(TaylorAt, AffineAtNode) {
  Rational x(3, 7);
  RF f(P{5} + P::linear(-x, 1) * Rational(2), P{1});
  EXPECT_EQ(taylor_at(f, x, 2).coeffs, (std::vector<Rational>{5, 2, 0}));
}

TEST(TaylorAt, SquaredDenominator) {
  Rational x(-2);
  P one_minus_u = P::linear(1 + x, -1);  // 1 - (z - x)
  RF f(P{1}, one_minus_u * one_minus_u);
  EXPECT_EQ(taylor_at(f, x, 3).coeffs, (std::vector<Rational>{1, 2, 3, 4}));
}

TEST(TaylorAt, PoleAtNodeIsRejected) {
  try {
    taylor_at(RF(P{1}, z), 0, 2);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleAtNode);
  }
}

TEST(TaylorAt, PoleTermReportedSeparately) {
  RF f(z, P{1}, 0, -3);
  auto l = laurent_at(f, 0, 2);
  EXPECT_EQ(l.residue, Rational(-3));
  EXPECT_EQ(l.taylor.coeffs, (std::vector<Rational>{0, 1, 0}));
  // Away from the pole the term is expanded: -1/(z - 1) at 0 is 1 + z + z^2.
  RF g(P{}, P{1}, 1, -1);
  auto m = laurent_at(g, 0, 2);
  EXPECT_EQ(m.residue, Rational(0));
  EXPECT_EQ(m.taylor.coeffs, (std::vector<Rational>{1, 1, 1}));
}

TEST(TaylorAt, MatchesDerivativeOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> nc, dc;
    for (long k = 0, d = rng.integer(0, 4); k <= d; ++k) nc.push_back(rng.rational(3));
    for (long k = 0, d = rng.integer(0, 4); k <= d; ++k) dc.push_back(rng.rational(3));
    P p(nc), q(dc);
    Rational x = rng.rational(2);
    if (q.is_zero() || sgn(q(x)) == 0) continue;
    EXPECT_EQ(taylor_at(RF(p, q), x, 6).coeffs, testing::taylor_by_derivatives(p, q, x, 6));
  }
}

TEST(Kronecker, HankelRankEqualsDegree) {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    long deg = rng.integer(1, 4);
    std::vector<Rational> nc, dc{1};
    for (long k = 0; k < deg; ++k) nc.push_back(rng.rational(3));
    for (long k = 1; k <= deg; ++k) dc.push_back(rng.rational(3));
    RF f{P(nc), P(dc)};
    if (f.degree() < 1) continue;
    const std::size_t m = 8;
    auto t = taylor_at(f, 0, 2 * m);
    // Shifted Hankel [a^{i+j+1}] of a proper function has rank = degree.
    EXPECT_EQ(rank_exact(build_hankel(std::span<const Rational>(t.coeffs), m).entries), static_cast<std::size_t>(f.degree()));
  }
}

TEST(Lft, IdentityLeavesFunction) {
  RF h(P{1, 2}, P{3, 0, 1});
  EXPECT_EQ(lft_apply(LftMatrix::identity(), h), h);
}

TEST(Lft, SwapGivesReciprocal) {
  LftMatrix swap{P(), P{1}, P{1}, P()};
  EXPECT_EQ(lft_apply(swap, RF(z, P{1})), RF(P{1}, z));
}

TEST(Lft, SingleFactorOnZero) {
  EXPECT_EQ(lft_apply(LftMatrix::augmentation_factor(0, 1, 0), RF()), RF(z, P{1}));
}

TEST(Lft, DegenerateDenominatorIsRejected) {
  LftMatrix m{P{1}, P(), P(), P()};
  try {
    lft_apply(m, RF(z, P{1}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateLft);
  }
}

TEST(Lft, PointwiseMatchesClosedForm) {
  using C = std::complex<double>;
  LftMatrix a = LftMatrix::augmentation_factor(Rational(1, 2), 3, Rational(-1, 3));
  RF h(P{1, 2}, P{3, 0, 1});
  auto closed = lft_apply(a, h);
  auto ev = lft_apply<C>(a, [h](const C& w) { return h.evaluate<C>(w); });
  for (C w : {C(0.3, 0.7), C(-2, 1e-3), C(5, 5)}) EXPECT_LT(std::abs(ev(w) - closed.evaluate<C>(w)), 1e-12);
}

TEST(Lft, FactorDeterminant) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    Rational s = rng.rational(3), t = rng.positive(3), x = rng.rational(3);
    P u = P::linear(-x, 1);
    EXPECT_EQ(LftMatrix::augmentation_factor(s, t, x).det(), u * u * (t * t));
  }
}

TEST(Lft, ChainExampleAndDeterminant) {
  ParameterTable tab;
  tab.m = tab.depth = 1;
  tab.s = {0};
  tab.t = {1};
  LftMatrix chain = compose_lft_chain(tab, 0);
  EXPECT_EQ(chain, (LftMatrix{P(), -z, z, P{-1}}));
  EXPECT_EQ(chain.det(), z * z);

  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    ParameterTable p;
    p.depth = p.m = static_cast<std::size_t>(rng.integer(1, 5));
    for (std::size_t j = 0; j < p.depth; ++j) {
      p.s.push_back(rng.rational(3));
      p.t.push_back(rng.positive(3));
    }
    Rational x = rng.rational(2);
    EXPECT_EQ(compose_lft_chain(p, x).det(), P::monomial(p.lft_constant(), 2 * p.depth).shifted(-x));
  }
}

TEST(ContinuedFraction, Examples) {
  ContinuedFraction cf{0, {0}, {1}, ConstantTail{0}};
  EXPECT_EQ(build_continued_fraction(cf), c(RF(z, P{1})));
  cf.tail = ConstantTail{1};
  EXPECT_EQ(build_continued_fraction(cf), c(RF(z, P{1, -1})));
  ContinuedFraction zero_depth{0, {7}, {0}, ConstantTail{3}};
  EXPECT_EQ(build_continued_fraction(zero_depth), CRF::constant(7));
}

TEST(ContinuedFraction, MalformedTailsAreRejected) {
  auto code_of = [](const ContinuedFraction& cf) {
    try {
      build_continued_fraction(cf);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of({0, {0}, {1}, std::monostate{}}), ErrorCode::InvalidTail);
  EXPECT_EQ(code_of({0, {0, 1}, {1}, ConstantTail{0}}), ErrorCode::InvalidTail);
  EXPECT_EQ(code_of({0, {0}, {1}, AugmentedTail{0, 0, CRF()}}), ErrorCode::InvalidTail);
  EXPECT_EQ(code_of({0, {0}, {-1}, ConstantTail{0}}), ErrorCode::InvalidAugmentation);
}

TEST(ContinuedFraction, FreeTailEvaluator) {
  using C = std::complex<double>;
  ContinuedFraction cf{Rational(1, 2), {1, -2}, {2, Rational(1, 3)}, std::monostate{}};
  auto free_ev = continued_fraction_evaluator<C>(cf, [](const C& w) { return w; });
  ContinuedFraction closed = cf;
  closed.tail = RationalTail{c(RF(z, P{1}))};
  CRF f = build_continued_fraction(closed);
  for (C w : {C(0.1, 0.2), C(3, 1), C(-1, 0.5)}) EXPECT_LT(std::abs(free_ev(w) - f.evaluate<C>(w)), 1e-12);
  EXPECT_THROW(continued_fraction_evaluator<C>(cf), Error);
}

TEST(ContinuedFraction, MatchesIteratedSeriesAugmentation) {
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    ContinuedFraction cf;
    cf.x = rng.rational(2);
    std::size_t depth = static_cast<std::size_t>(rng.integer(1, 4));
    for (std::size_t j = 0; j < depth; ++j) {
      cf.s.push_back(rng.rational(3));
      cf.t.push_back(rng.positive(3));
    }
    Rational tail = rng.rational(3);
    cf.tail = ConstantTail{tail};
    CRF f = build_continued_fraction(cf);
    const std::size_t order = 2 * depth + 3;
    // Innermost constant, then augment at the coefficient level outward.
    TruncatedSeries<Rational> g{cf.x, std::vector<Rational>(order - 2 * depth + 1, Rational(0))};
    g.coeffs[0] = tail;
    for (std::size_t j = depth; j-- > 0;) g = augment_series(g, cf.s[j], cf.t[j]);
    auto expected = testing::complexify(g.coeffs);
    EXPECT_EQ(taylor_at(f, cf.x, order).coeffs, expected);
  }
}

}  // namespace
}  // namespace bcf

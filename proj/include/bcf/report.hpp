// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <variant>

#include "bcf/io.hpp"
#include "bcf/precision.hpp"
#include "bcf/solver.hpp"
#include "bcf/verify.hpp"

namespace bcf {

namespace detail {

inline Check exact_taylor_check(const RationalFunction<ComplexRational>& f, const ProblemData& p) {
  Check c;
  c.name = "taylor_exact";
  try {
    auto l = laurent_at(f, p.x, p.n());
    std::size_t mismatches = l.residue == p.residue() ? 0 : 1;
    for (std::size_t k = 0; k <= p.n(); ++k)
      if (!(l.taylor.coeffs[k] == p.a[k])) ++mismatches;
    c.residual = static_cast<double>(mismatches);
    c.passed = mismatches == 0;
    c.detail = std::to_string(mismatches) + " mismatched coefficients";
  } catch (const Error& e) {
    c.passed = false;
    c.residual = 1;
    c.detail = e.what();
  }
  return c;
}

inline Check boundary_modulus_check(const InteriorInterpolant& s, std::size_t grid) {
  using C = std::complex<double>;
  Check c;
  c.name = "boundary_modulus";
  c.threshold = 1e-9;
  InteriorEvaluator<C> phi(s);
  c.residual = -1;
  for (std::size_t k = 0; k < grid; ++k) {
    C z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid));
    double excess = std::abs(phi(z)) - 1.0;
    if (excess > c.residual) {
      c.residual = excess;
      c.worst_point = z;
    }
  }
  c.passed = c.residual <= c.threshold;
  c.detail = "max |phi| - 1 over " + std::to_string(grid) + " points";
  return c;
}

}  // namespace detail

/// Independent checks of a candidate solution against its problem.
inline Report verify_solution(const ProblemData& p, const SolutionFunction& f, const ToleranceConfig& tol) {
  using C = std::complex<double>;
  Report r;
  r.seed = tol.seed;
  std::function<C(const C&)> ev;
  if (const auto* g = std::get_if<RationalFunction<ComplexRational>>(&f)) {
    r.checks.push_back(detail::exact_taylor_check(*g, p));
    auto fn = *g;
    ev = [fn](const C& z) { return fn.evaluate<C>(z); };
    if (fn.analytic_part().den()(ComplexRational(p.x)).is_zero()) {
      r.checks.push_back({"taylor_match", false, 1, tol.taylor_rel_tol, std::nullopt, "denominator vanishes at the node"});
    } else {
      auto est = taylor_oracle<C>(ev, p.x.get_d(), p.n(), quadrature_radius(fn, p.x), tol.quadrature_points);
      r.checks.push_back(taylor_check(est, p.residue(), p.a, tol.taylor_rel_tol));
    }
  } else {
    const auto& pl = std::get<PipelineSolution>(f);
    ev = pl.evaluator<C>();
    auto mp = pl.evaluator<MpComplex>();
    auto est = taylor_oracle<MpComplex>(mp, complex_traits<MpComplex>::from_rational(p.x), p.n(), MpReal(pl.analytic_radius()),
                                        tol.quadrature_points);
    r.checks.push_back(taylor_check(est, p.residue(), p.a, tol.taylor_rel_tol));
    r.checks.push_back(detail::boundary_modulus_check(pl.interior, tol.boundary_grid));
  }
  r.checks.push_back(pick_sample(ev, p.x.get_d(), tol));

  // Structural identities of the solution family, when there is one.
  Verdict v = check_solvable(p);
  if (v.solvable() && !v.determinate() && !v.rho) {
    Parametrization par = parametrize(p);
    Poly<Rational> expected = Poly<Rational>::monomial(par.K, 2 * par.params.depth).shifted(Rational(-p.x));
    bool det_ok = par.chain.det() == expected;
    r.checks.push_back({"lft_determinant", det_ok, det_ok ? 0.0 : 1.0, 0, std::nullopt, "det = K (z - x)^(2m), K = " + to_string(par.K)});
    auto nev = nevanlinna_t_formulas(v.classification->leading_minors, par.params.t);
    r.checks.push_back({"nevanlinna_identities", nev.all(), nev.all() ? 0.0 : 1.0, 0, std::nullopt, "determinant product, adjacent ratio, closed form"});
  }
  return r;
}

}  // namespace bcf

// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "bcf/error.hpp"
#include "bcf/matrix.hpp"
#include "bcf/number.hpp"
#include "bcf/rational_function.hpp"

namespace bcf {

struct ToleranceConfig {
  double psd_eig_tol = 1e-9;
  double taylor_rel_tol = 1e-6;
  double im_floor = -1e-9;
  std::size_t pick_radial = 100;
  std::size_t pick_angular = 100;
  std::size_t boundary_grid = 4096;
  std::size_t sample_grid = 256;
  std::size_t quadrature_points = 128;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(psd_eig_tol > 0) || !(taylor_rel_tol > 0) || !(im_floor < 0))
      throw Error(ErrorCode::InvalidArgument, "tolerances must be positive (im_floor negative)");
    if (pick_radial < 2 || pick_angular < 1 || boundary_grid < 1 || sample_grid < 1 || quadrature_points < 8)
      throw Error(ErrorCode::InvalidArgument, "grid sizes are too small");
  }
};

/// Outcome of one oracle check. residual is the measured quantity that was
/// compared with its threshold.
struct Check {
  std::string name;
  bool passed = false;
  double residual = 0;
  double threshold = 0;
  std::optional<std::complex<double>> worst_point;
  std::string detail;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

// ---------------------------------------------------------------------------
// Matrix oracles.

inline Eigen::MatrixXd to_eigen(const RationalMatrix& h) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(h.rows()), static_cast<Eigen::Index>(h.cols()));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h(i, j).get_d();
  return out;
}

inline double min_eigenvalue(const Eigen::MatrixXd& h) {
  if (h.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Smallest eigenvalue >= -tol ||H||, with the spectral norm.
inline bool psd_oracle(const Eigen::MatrixXd& h, double tol = 1e-9) {
  if (h.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  return es.eigenvalues().minCoeff() >= -tol * norm;
}

/// PSD, and H - diag(0, .., eps) is not PSD for every probe eps. The probe
/// threshold scales with eps so that the smallest probes stay resolvable.
inline bool se_minimal_oracle(const Eigen::MatrixXd& h, double tol = 1e-9) {
  if (h.rows() == 0 || !psd_oracle(h, tol)) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const double norm = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Eigen::Index last = h.rows() - 1;
  for (double eps : {1e-1, 1e-2, 1e-4, 1e-6, 1e-8}) {
    Eigen::MatrixXd p = h;
    p(last, last) -= eps;
    if (min_eigenvalue(p) >= -tol * eps * norm) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cauchy-integral Taylor oracle.

template <class C>
struct LaurentEstimate {
  C residue;
  std::vector<C> taylor;
};

/// L_{-1}, L_0, .., L_order of f at x from the trapezoid rule on |z - x| = r.
template <class C>
LaurentEstimate<C> taylor_oracle(const std::function<C(const C&)>& f, const real_of<C>& x, std::size_t order, const real_of<C>& r,
                                 std::size_t points = 128) {
  using R = real_of<C>;
  if (points < order + 2) throw Error(ErrorCode::InvalidArgument, "too few quadrature points for the requested order");
  const R two_pi = R(2) * boost::math::constants::pi<R>();
  std::vector<C> values(points);
  std::vector<C> unit(points);
  for (std::size_t j = 0; j < points; ++j) {
    R theta = two_pi * R(static_cast<double>(j)) / R(static_cast<double>(points));
    using std::cos;
    using std::sin;
    unit[j] = C(cos(theta), sin(theta));
    values[j] = f(C(x, R(0)) + C(r, R(0)) * unit[j]);
  }
  auto coefficient = [&](long k) {
    C acc(0);
    for (std::size_t j = 0; j < points; ++j) {
      // unit[j]^{-k} = unit[(-k j) mod points]
      long idx = (-k * static_cast<long>(j)) % static_cast<long>(points);
      if (idx < 0) idx += static_cast<long>(points);
      acc += values[j] * unit[static_cast<std::size_t>(idx)];
    }
    using std::pow;
    R scale = R(1) / R(static_cast<double>(points));
    for (long e = 0; e < k; ++e) scale /= r;
    for (long e = 0; e > k; --e) scale *= r;
    return acc * C(scale, R(0));
  };
  LaurentEstimate<C> out;
  out.residue = coefficient(-1);
  for (std::size_t k = 0; k <= order; ++k) out.taylor.push_back(coefficient(static_cast<long>(k)));
  return out;
}

/// Roots of a polynomial from its companion matrix.
inline std::vector<std::complex<double>> polynomial_roots(const Poly<ComplexRational>& p) {
  const int d = p.degree();
  if (d < 1) return {};
  using C = std::complex<double>;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  C lead = to_complex<C>(p.leading());
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -to_complex<C>(p.coeff(static_cast<std::size_t>(i))) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<C> roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

/// Half the distance from x to the nearest singularity other than a pole
/// term located at x itself, capped at 1; 1e-2 if the roots are not finite.
inline double quadrature_radius(const RationalFunction<ComplexRational>& f, const Rational& x) {
  const double xd = x.get_d();
  double dist = 2.0;
  for (auto z : polynomial_roots(f.den())) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return 1e-2;
    dist = std::min(dist, std::abs(z - xd));
  }
  if (f.has_pole_term() && !(f.pole_node() == x)) dist = std::min(dist, std::abs(f.pole_node().get_d() - xd));
  if (!(dist > 0)) return 1e-2;
  return dist / 2.0;
}

/// Compares Laurent estimates with exact targets: |est - a| <= tol max(1, |a|).
template <class C>
Check taylor_check(const LaurentEstimate<C>& est, const ComplexRational& residue, const std::vector<ComplexRational>& a, double tol,
                   std::string name = "taylor_match") {
  Check c;
  c.name = std::move(name);
  c.threshold = tol;
  auto rel = [](const C& got, const ComplexRational& want) {
    std::complex<double> g(static_cast<double>(got.real()), static_cast<double>(got.imag()));
    std::complex<double> w = to_complex<std::complex<double>>(want);
    return std::abs(g - w) / std::max(1.0, std::abs(w));
  };
  double worst = rel(est.residue, residue);
  std::size_t worst_k = 0;
  bool worst_is_residue = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double e = rel(est.taylor[k], a[k]);
    if (!(e <= worst)) {
      worst = e;
      worst_k = k;
      worst_is_residue = false;
    }
  }
  c.residual = worst;
  c.passed = worst <= tol;
  c.detail = worst_is_residue ? "worst at L_-1" : "worst at L_" + std::to_string(worst_k);
  return c;
}

// ---------------------------------------------------------------------------
// Pick-class sampling.

/// Points x + rho e^{i theta} with rho log-spaced in [1e-3, 1e3] and theta in
/// (0, pi). A nonzero seed jitters the angles reproducibly.
inline std::vector<std::complex<double>> pick_grid(double x, std::size_t radial, std::size_t angular, std::uint64_t seed = 0) {
  std::vector<std::complex<double>> pts;
  pts.reserve(radial * angular);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  for (std::size_t i = 0; i < radial; ++i) {
    double rho = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i) / static_cast<double>(radial - 1));
    for (std::size_t j = 0; j < angular; ++j) {
      double frac = (static_cast<double>(j) + 0.5 + (seed ? jitter(rng) : 0.0)) / static_cast<double>(angular);
      pts.push_back(x + std::polar(rho, std::numbers::pi * frac));
    }
  }
  return pts;
}

/// Minimum of Im f over the grid; passes iff it is at least im_floor.
inline Check pick_sample(const std::function<std::complex<double>(const std::complex<double>&)>& f, double x, const ToleranceConfig& tol) {
  Check c;
  c.name = "pick_sample";
  c.threshold = tol.im_floor;
  c.residual = std::numeric_limits<double>::infinity();
  for (auto z : pick_grid(x, tol.pick_radial, tol.pick_angular, tol.seed)) {
    std::complex<double> w = f(z);
    double im = std::isfinite(w.imag()) ? w.imag() : -std::numeric_limits<double>::infinity();
    if (im < c.residual) {
      c.residual = im;
      c.worst_point = z;
    }
  }
  c.passed = c.residual >= tol.im_floor;
  c.detail = std::to_string(tol.pick_radial * tol.pick_angular) + " points";
  return c;
}

}  // namespace bcf

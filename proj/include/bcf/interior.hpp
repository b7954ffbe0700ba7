// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"
#include "bcf/precision.hpp"
#include "bcf/series.hpp"

namespace bcf {

struct InteriorConfig {
  /// Boundary points used when certifying a choice of N (a floor; the grid
  /// grows with N so that the derivative pad stays small).
  std::size_t boundary_grid = 4096;
  std::size_t n_max = std::size_t{1} << 22;
};

/// Target data for a Schur-class interpolant at a boundary point tau.
struct SchurData {
  ComplexRational tau;
  std::vector<ComplexRational> b;
};

/// Image of the real node x on the unit circle, (x - i)/(x + i).
inline ComplexRational cayley_node(const Rational& x) {
  return (ComplexRational(x) - ComplexRational::i()) / (ComplexRational(x) + ComplexRational::i());
}

/// Transports Taylor targets at x for a Pick function to Taylor targets at
/// tau for the Schur function phi = V o f o Z^{-1}, where Z(z) = (z-i)/(z+i)
/// and V(w) = (w-i)/(w+i).
inline SchurData transport_to_disc(const ProblemData& p) {
  const std::size_t n = p.n();
  if (sgn(p.a[0].im()) <= 0) throw Error(ErrorCode::NotInterior, "Im a^0 must be positive, got " + to_string(p.a[0]));
  const ComplexRational i = ComplexRational::i();
  SchurData d{cayley_node(p.x), {}};
  // Z^{-1}(tau + v) = i (1 + tau + v) / (1 - tau - v), expanded in v.
  std::vector<ComplexRational> num{i * (ComplexRational(1) + d.tau), i};
  std::vector<ComplexRational> den{ComplexRational(1) - d.tau, ComplexRational(-1)};
  std::vector<ComplexRational> zeta = series_multiply<ComplexRational>(num, series_reciprocal<ComplexRational>(den, n), n);
  if (!(zeta[0] == ComplexRational(p.x))) throw Error(ErrorCode::InternalInconsistency, "Cayley node does not map back to x");
  zeta[0] = 0;
  std::vector<ComplexRational> f = series_compose<ComplexRational>(p.a, zeta, n);
  std::vector<ComplexRational> fm = f, fp = f;
  fm[0] -= i;
  fp[0] += i;
  d.b = series_multiply<ComplexRational>(fm, series_reciprocal<ComplexRational>(fp, n), n);
  return d;
}

/// phi = (phi0 + b^0)/(1 + conj(b^0) phi0), phi0(z) = c (z-tau)^q Q(z-tau) h_N(z),
/// h_N(z) = 1 - (1 - ((tau+z)/(2 tau))^N)^m_exp.
struct InteriorInterpolant {
  ComplexRational tau;
  std::vector<ComplexRational> b;
  ComplexRational center;
  /// Targets after the disc automorphism that sends center to 0.
  std::vector<ComplexRational> reduced;
  /// First nonzero index of reduced; 0 means phi0 vanishes identically.
  std::size_t q = 0;
  ComplexRational lead;
  /// Coefficients of Q in powers of (z - tau); Q(tau) = 1.
  std::vector<ComplexRational> Q;
  std::size_t m_exp = 1;
  std::size_t N = 1;
  double epsilon = 0;

  bool trivial() const { return q == 0; }
};

/// Cached floating-point form of an interpolant.
template <class C>
class InteriorEvaluator {
 public:
  using R = real_of<C>;

  explicit InteriorEvaluator(const InteriorInterpolant& s)
      : tau_(to_complex<C>(s.tau)),
        center_(to_complex<C>(s.center)),
        center_conj_(to_complex<C>(s.center.conj())),
        lead_(to_complex<C>(s.lead)),
        q_(s.q),
        m_(s.m_exp),
        n_(s.N) {
    for (const auto& c : s.Q) Q_.push_back(to_complex<C>(c));
  }

  C h(const C& z) const {
    C w = (tau_ + z) / (C(2) * tau_);
    return C(1) - ipow(C(1) - ipow(w, n_), m_);
  }

  C h_derivative(const C& z) const {
    C w = (tau_ + z) / (C(2) * tau_);
    C wn1 = ipow(w, n_ - 1);
    C inner = C(1) - wn1 * w;
    return C(R(static_cast<double>(m_ * n_))) * ipow(inner, m_ - 1) * wn1 / (C(2) * tau_);
  }

  C phi0(const C& z) const {
    if (q_ == 0) return C(0);
    C v = z - tau_;
    return lead_ * ipow(v, q_) * poly(v) * h(z);
  }

  C phi0_derivative(const C& z) const {
    if (q_ == 0) return C(0);
    C v = z - tau_;
    C vq = ipow(v, q_);
    C dvq = C(R(static_cast<double>(q_))) * ipow(v, q_ - 1);
    C p = poly(v), dp = poly_derivative(v);
    C hz = h(z);
    return lead_ * (dvq * p * hz + vq * dp * hz + vq * p * h_derivative(z));
  }

  C operator()(const C& z) const {
    C f0 = phi0(z);
    return (f0 + center_) / (C(1) + center_conj_ * f0);
  }

  const C& tau() const { return tau_; }

 private:
  C poly(const C& v) const {
    C acc(0);
    for (std::size_t k = Q_.size(); k-- > 0;) acc = acc * v + Q_[k];
    return acc;
  }
  C poly_derivative(const C& v) const {
    C acc(0);
    for (std::size_t k = Q_.size(); k-- > 1;) acc = acc * v + C(R(static_cast<double>(k))) * Q_[k];
    return acc;
  }

  C tau_, center_, center_conj_, lead_;
  std::vector<C> Q_;
  std::size_t q_, m_, n_;
};

namespace detail {

// Upper bound for max |Q| on the closed disc, using |z - tau| <= 2.
inline double q_norm_bound(const std::vector<ComplexRational>& Q) {
  double s = 0, p = 1;
  for (const auto& c : Q) {
    s += std::abs(to_complex<std::complex<double>>(c)) * p;
    p *= 2;
  }
  return s;
}

// Largest eps = pi / 2^j with (2 sin(eps/2))^q <= 1/(2 |c| ||Q|| (2^m + 1)).
inline double split_angle(const InteriorInterpolant& s) {
  const double bound =
      1.0 / (2.0 * std::abs(to_complex<std::complex<double>>(s.lead)) * q_norm_bound(s.Q) * (std::ldexp(1.0, static_cast<int>(s.m_exp)) + 1.0));
  double eps = std::numbers::pi;
  while (std::pow(2.0 * std::sin(eps / 2.0), static_cast<double>(s.q)) > bound) eps /= 2.0;
  return eps;
}

// |phi0| + 2 |phi0'| pi / G <= 1 on the grid points with |theta| >= eps.
inline bool boundary_bound_holds(const InteriorInterpolant& s, std::size_t grid) {
  using C = std::complex<double>;
  InteriorEvaluator<C> ev(s);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
  const double pad = 2.0 * std::numbers::pi / static_cast<double>(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    double theta = -std::numbers::pi + step * (static_cast<double>(k) + 0.5);
    if (std::abs(theta) < s.epsilon) continue;
    C z = ev.tau() * std::polar(1.0, theta);
    if (std::abs(ev.phi0(z)) + pad * std::abs(ev.phi0_derivative(z)) > 1.0) return false;
  }
  return true;
}

inline std::size_t grid_for(std::size_t N, std::size_t m_exp, std::size_t floor) {
  std::size_t g = floor;
  while (g < 4 * N * m_exp) g *= 2;
  return g;
}

}  // namespace detail

/// Smallest N on the search bracket for which the boundary bound holds.
/// Exponential search finds a passing N, then bisection narrows the bracket.
inline std::size_t select_N(InteriorInterpolant s, const InteriorConfig& cfg = {}) {
  if (s.trivial()) return 1;
  auto passes = [&](std::size_t n) {
    s.N = n;
    return detail::boundary_bound_holds(s, detail::grid_for(n, s.m_exp, cfg.boundary_grid));
  };
  if (passes(1)) return 1;
  std::size_t lo = 1, hi = 2;
  while (!passes(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > cfg.n_max)
      throw Error(ErrorCode::SelectionBudgetExceeded, "no admissible N up to " + std::to_string(cfg.n_max));
  }
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

inline InteriorInterpolant build_schur_interpolant(const SchurData& d, const InteriorConfig& cfg = {}) {
  if (d.b.empty()) throw Error(ErrorCode::InvalidArgument, "Schur data has no targets");
  const std::size_t n = d.b.size() - 1;
  if (!(d.b[0].norm() < 1)) throw Error(ErrorCode::NotSchurData, "|b^0| must be below 1, got " + to_string(d.b[0]));
  InteriorInterpolant s;
  s.tau = d.tau;
  s.b = d.b;
  s.center = d.b[0];
  s.m_exp = n + 1;
  // (b - b0) / (1 - conj(b0) b)
  std::vector<ComplexRational> num = d.b, den(n + 1);
  num[0] = 0;
  for (std::size_t k = 0; k <= n; ++k) den[k] = -(s.center.conj() * d.b[k]);
  den[0] += ComplexRational(1);
  s.reduced = series_multiply<ComplexRational>(num, series_reciprocal<ComplexRational>(den, n), n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (!s.reduced[k].is_zero()) {
      s.q = k;
      break;
    }
  }
  if (s.trivial()) return s;
  s.lead = s.reduced[s.q];
  for (std::size_t k = s.q; k <= n; ++k) s.Q.push_back(s.reduced[k] / s.lead);
  s.epsilon = detail::split_angle(s);
  s.N = select_N(s, cfg);
  return s;
}

/// Pick-class function f = V^{-1} o phi o Z, with V^{-1}(w) = i (1 + w)/(1 - w).
template <class C>
class PickFromSchur {
 public:
  explicit PickFromSchur(const InteriorInterpolant& s) : phi_(s) {}

  C operator()(const C& z) const {
    const C i(0, 1);
    C w = phi_((z - i) / (z + i));
    return i * (C(1) + w) / (C(1) - w);
  }

 private:
  InteriorEvaluator<C> phi_;
};

}  // namespace bcf

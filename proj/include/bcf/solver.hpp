// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/hankel.hpp"
#include "bcf/interior.hpp"
#include "bcf/lft.hpp"
#include "bcf/matrix.hpp"
#include "bcf/number.hpp"
#include "bcf/parameters.hpp"
#include "bcf/rational_function.hpp"
#include "bcf/series.hpp"
#include "bcf/tail.hpp"

namespace bcf {

enum class Status { Unsolvable, SolvableDeterminate, SolvableIndeterminate };

enum class Reason {
  ResidueNotReal,
  ResiduePositive,
  ImA0Negative,
  RhoOdd,
  ComplexHankelNotPd,
  ImA2mNegative,
  HankelNotPositive,
  HankelNotPdNotSeMinimal,
  EvenRankConditionFails,
  InteriorValue,
  ComplexHankelPd,
  HankelPd,
  HankelSeMinimal,
  ZeroHankelConstant,
};

/// Whether the determinacy claim is a known result (Cited) or follows from the
/// visible freedom of a construction (Derived).
enum class DeterminacyBasis { Cited, Derived };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Unsolvable: return "unsolvable";
    case Status::SolvableDeterminate: return "solvable_determinate";
    case Status::SolvableIndeterminate: return "solvable_indeterminate";
  }
  return "unknown";
}

constexpr std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::ResidueNotReal: return "residue_not_real";
    case Reason::ResiduePositive: return "residue_positive";
    case Reason::ImA0Negative: return "im_a0_negative";
    case Reason::RhoOdd: return "rho_odd";
    case Reason::ComplexHankelNotPd: return "complex_hankel_not_pd";
    case Reason::ImA2mNegative: return "im_a2m_negative";
    case Reason::HankelNotPositive: return "hankel_not_positive";
    case Reason::HankelNotPdNotSeMinimal: return "hankel_not_pd_not_se_minimal";
    case Reason::EvenRankConditionFails: return "even_rank_condition_fails";
    case Reason::InteriorValue: return "interior_value";
    case Reason::ComplexHankelPd: return "complex_hankel_pd";
    case Reason::HankelPd: return "hankel_pd";
    case Reason::HankelSeMinimal: return "hankel_se_minimal";
    case Reason::ZeroHankelConstant: return "zero_hankel_constant";
  }
  return "unknown";
}

constexpr std::string_view to_string(DeterminacyBasis b) { return b == DeterminacyBasis::Cited ? "cited" : "derived"; }

struct Verdict {
  Status status = Status::Unsolvable;
  Reason reason = Reason::HankelNotPositive;
  Rho rho;
  std::size_t m = 0;
  std::size_t rank = 0;
  std::optional<Classification> classification;
  DeterminacyBasis basis = DeterminacyBasis::Cited;

  bool solvable() const { return status != Status::Unsolvable; }
  bool determinate() const { return status == Status::SolvableDeterminate; }
};

class UnsolvableError : public Error {
 public:
  explicit UnsolvableError(Verdict v)
      : Error(ErrorCode::Unsolvable, std::string(to_string(v.reason))), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// ---------------------------------------------------------------------------
// Decision.

/// [a^m .. a^{m+r-1}] H_r(a)^{-1} [a^{m+1} .. a^{m+r}]^T == a^{2m}.
inline bool even_rank_condition(std::span<const Rational> a, std::size_t m, std::size_t r) {
  if (r == 0 || a.size() < 2 * m + 1 || r > m) throw Error(ErrorCode::InvalidArgument, "even rank condition needs 1 <= r <= m and a^0..a^{2m}");
  RationalMatrix hr = build_hankel(a, r).entries;
  std::vector<Rational> rhs(a.begin() + static_cast<std::ptrdiff_t>(m + 1), a.begin() + static_cast<std::ptrdiff_t>(m + r + 1));
  auto y = solve_linear(hr, rhs);
  if (!y) throw Error(ErrorCode::InternalInconsistency, "H_" + std::to_string(r) + " is singular");
  Rational value(0);
  for (std::size_t k = 0; k < r; ++k) value += a[m + k] * (*y)[k];
  return value == a[2 * m];
}

/// True iff H_m(a) >= 0 with n = 2m - 1 odd.
inline bool check_relaxed(std::span<const ComplexRational> a) {
  if (a.size() % 2 != 0) throw Error(ErrorCode::InvalidArgument, "relaxed criterion needs odd n");
  for (const auto& v : a)
    if (!v.is_real()) throw Error(ErrorCode::NonRealEntry, "relaxed criterion needs real data");
  return is_psd_exact(build_hankel(a, a.size() / 2).entries);
}

inline Verdict check_solvable(const ProblemData& p) {
  const std::size_t n = p.n();
  if (n == 0) throw Error(ErrorCode::TrivialProblem, "n = 0 is solved by the constant a^0");
  Verdict v;
  auto reject = [&](Reason r) {
    v.status = Status::Unsolvable;
    v.reason = r;
    return v;
  };
  auto accept = [&](Status s, Reason r) {
    v.status = s;
    v.reason = r;
    return v;
  };
  const ComplexRational res = p.residue();
  if (!res.is_real()) return reject(Reason::ResidueNotReal);
  if (sgn(res.re()) > 0) return reject(Reason::ResiduePositive);
  if (sgn(p.a[0].im()) < 0) return reject(Reason::ImA0Negative);
  v.rho = rho(p.a);

  if (v.rho) {
    const std::size_t r = *v.rho;
    v.basis = DeterminacyBasis::Derived;
    if (r % 2 == 1) return reject(Reason::RhoOdd);
    v.m = r / 2;
    if (v.m == 0) return accept(Status::SolvableIndeterminate, Reason::InteriorValue);
    v.classification = classify(build_hankel(std::span<const ComplexRational>(p.a), v.m));
    v.rank = v.classification->rank;
    if (v.classification->tag != HankelClass::PositiveDefinite) return reject(Reason::ComplexHankelNotPd);
    if (sgn(p.a[r].im()) <= 0) return reject(Reason::ImA2mNegative);
    return accept(Status::SolvableIndeterminate, Reason::ComplexHankelPd);
  }

  const std::vector<Rational> a = p.real_targets();
  v.m = (n + 1) / 2;
  v.classification = classify(build_hankel(std::span<const Rational>(a), v.m));
  v.rank = v.classification->rank;
  switch (v.classification->tag) {
    case HankelClass::PositiveDefinite: return accept(Status::SolvableIndeterminate, Reason::HankelPd);
    case HankelClass::NotPositive: return reject(Reason::HankelNotPositive);
    case HankelClass::PositiveSingularNotSEMinimal: return reject(Reason::HankelNotPdNotSeMinimal);
    case HankelClass::SEMinimallyPositive: break;
  }
  if (n % 2 == 1) return accept(Status::SolvableDeterminate, Reason::HankelSeMinimal);
  if (v.rank == 0) {
    // H_m = 0: only the constant a^0 can interpolate, which needs a^n = 0.
    if (sgn(a[n]) == 0) return accept(Status::SolvableDeterminate, Reason::ZeroHankelConstant);
    return reject(Reason::EvenRankConditionFails);
  }
  if (even_rank_condition(a, v.m, v.rank)) return accept(Status::SolvableDeterminate, Reason::HankelSeMinimal);
  return reject(Reason::EvenRankConditionFails);
}

// ---------------------------------------------------------------------------
// Construction for real data.

namespace detail {

inline void require_exact_match(const RationalFunction<ComplexRational>& f, const ProblemData& p) {
  auto l = laurent_at(f, p.x, p.n());
  if (!(l.residue == p.residue()) || l.taylor.coeffs != p.a)
    throw Error(ErrorCode::InternalInconsistency, "constructed function does not reproduce the targets");
}

}  // namespace detail

/// The unique solution, a^{-1}/(z-x) + N(z-x)/D(z-x) with D = sum c_j u^j,
/// c_0 = -1 and N_j = sum_{k<=j} c_k a^{j-k}.
inline RationalFunction<Rational> unique_solution(const ProblemData& p) {
  Verdict v = check_solvable(p);
  if (!v.determinate()) throw Error(ErrorCode::NotDeterminate, "problem is " + std::string(to_string(v.status)));
  const std::vector<Rational> a = p.real_targets();
  const Rational residue = p.residue().re();
  const std::size_t r = v.rank;
  std::vector<Rational> c(r + 1, Rational(0));
  c[0] = -1;
  if (r > 0) {
    // [c_r .. c_1] H_r = [a^{r+1} .. a^{2r}], H_r symmetric.
    RationalMatrix hr = build_hankel(std::span<const Rational>(a), r).entries;
    std::vector<Rational> rhs(a.begin() + static_cast<std::ptrdiff_t>(r + 1), a.begin() + static_cast<std::ptrdiff_t>(2 * r + 1));
    auto y = solve_linear(hr, rhs);
    if (!y) throw Error(ErrorCode::InternalInconsistency, "H_r is singular");
    for (std::size_t k = 0; k < r; ++k) c[r - k] = (*y)[k];
  }
  std::vector<Rational> num(r + 1, Rational(0));
  for (std::size_t j = 0; j <= r; ++j)
    for (std::size_t k = 0; k <= j; ++k) num[j] += c[k] * a[j - k];
  Rational shift = -p.x;
  RationalFunction<Rational> f(Poly<Rational>(num).shifted(shift), Poly<Rational>(c).shifted(shift), p.x, residue);
  detail::require_exact_match(to_complex_rf(f), p);
  return f;
}

inline ParameterTable compute_parameters(const ProblemData& p) {
  const std::vector<Rational> a = p.real_targets();
  const std::size_t n = p.n();
  if (n == 0) throw Error(ErrorCode::TrivialProblem, "n = 0 has no parameters");
  ParameterTable tab;
  tab.x = p.x;
  tab.m = (n + 1) / 2;
  Classification cls = classify(build_hankel(std::span<const Rational>(a), tab.m));
  if (cls.tag != HankelClass::PositiveDefinite && cls.tag != HankelClass::SEMinimallyPositive)
    throw Error(ErrorCode::InvalidArgument, "parameters need a positive definite or SE-minimally positive Hankel matrix");
  TruncatedSeries<Rational> stage{p.x, a};
  for (std::size_t j = 1; j <= tab.m; ++j) {
    tab.stages.push_back(stage);
    const Rational& s = stage.coeffs[0];
    const Rational& t = stage.coeffs[1];
    if (sgn(t) == 0) {
      if (j - 1 != cls.rank) throw Error(ErrorCode::InternalInconsistency, "t_" + std::to_string(j) + " vanishes before the rank");
      tab.terminal = s;
      tab.depth = j - 1;
      return tab;
    }
    if (sgn(t) < 0) throw Error(ErrorCode::InternalInconsistency, "t_" + std::to_string(j) + " is negative");
    tab.s.push_back(s);
    tab.t.push_back(t);
    if (stage.order() >= 2) stage = reduce_series(stage);
  }
  tab.depth = tab.m;
  if (cls.tag == HankelClass::SEMinimallyPositive) throw Error(ErrorCode::InternalInconsistency, "singular Hankel matrix without a vanishing t");
  if (n % 2 == 0) {
    tab.stages.push_back(stage);
    tab.s_extra = stage.coeffs[0];
  }
  return tab;
}

struct NevanlinnaCheck {
  bool determinant_product = true;
  bool adjacent_ratio = true;
  bool closed_form = true;

  bool all() const { return determinant_product && adjacent_ratio && closed_form; }
};

/// Checks D_k = t_k t_{k-1}^3 ... t_1^{2k-1}, t_l t_{l+1} = D_{l-1} D_{l+1} / D_l^2
/// and t_l = D_l / D_{l-1}^3 (prod_{k=1}^{l-2} D_k^{(-1)^{k+l}})^4, with
/// D_{-1} = D_0 = 1, over the common length of D and t.
inline NevanlinnaCheck nevanlinna_t_formulas(std::span<const Rational> D, std::span<const Rational> t) {
  NevanlinnaCheck out;
  const std::size_t len = std::min(D.size(), t.size());
  auto d = [&](std::ptrdiff_t k) { return k <= 0 ? Rational(1) : D[static_cast<std::size_t>(k - 1)]; };
  for (std::size_t k = 1; k <= len; ++k) {
    Rational prod(1);
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t e = 0; e < 2 * (k - i) + 1; ++e) prod *= t[i - 1];
    if (!(prod == D[k - 1])) out.determinant_product = false;
  }
  for (std::size_t l = 1; l < len; ++l) {
    auto L = static_cast<std::ptrdiff_t>(l);
    if (sgn(d(L)) == 0 || !(t[l - 1] * t[l] == d(L - 1) * d(L + 1) / (d(L) * d(L)))) out.adjacent_ratio = false;
  }
  for (std::size_t l = 1; l <= len; ++l) {
    auto L = static_cast<std::ptrdiff_t>(l);
    Rational den = d(L - 1) * d(L - 1) * d(L - 1);
    if (sgn(den) == 0) {
      out.closed_form = false;
      continue;
    }
    Rational inner(1);
    for (std::ptrdiff_t k = 1; k <= L - 2; ++k) {
      if (sgn(d(k)) == 0) {
        inner = 0;
        break;
      }
      inner *= (k + L) % 2 == 0 ? d(k) : Rational(1 / d(k));
    }
    Rational inner4 = inner * inner * inner * inner;
    if (sgn(inner) == 0 || !(t[l - 1] == d(L) / den * inner4)) out.closed_form = false;
  }
  return out;
}

/// All solutions of an indeterminate real problem: f = L[A_1 ... A_m](h) + a^{-1}/(z-x).
/// For odd n, h is any Pick function analytic at x; for even n, h is the
/// augmentation at x of such a function by (s_{m+1}, t) with t > 0.
struct Parametrization {
  Rational x{0};
  Rational residue{0};
  std::size_t n = 0;
  ParameterTable params;
  LftMatrix chain;
  Rational K{1};

  bool even() const { return n % 2 == 0; }

  ContinuedFraction continued_fraction() const { return {x, params.s, params.t, std::monostate{}}; }

  std::string tail_contract() const {
    if (!even()) return "pick_function_analytic_at_x";
    return "augmentation_by_s_extra_and_t_positive";
  }
};

inline Parametrization parametrize(const ProblemData& p) {
  Verdict v = check_solvable(p);
  if (v.rho) throw Error(ErrorCode::ParametrizationUnsupported, "no parametrization for non-real data");
  if (!v.solvable() || v.determinate())
    throw Error(ErrorCode::NotIndeterminate, "problem is " + std::string(to_string(v.status)));
  Parametrization out;
  out.x = p.x;
  out.residue = p.residue().re();
  out.n = p.n();
  out.params = compute_parameters(p);
  out.chain = compose_lft_chain(out.params, p.x);
  out.K = out.params.lft_constant();
  return out;
}

/// The member of the family selected by a closed-form tail.
inline RationalFunction<ComplexRational> instantiate(const Parametrization& par, const Tail& tail, const ProblemData* check = nullptr) {
  RationalFunction<ComplexRational> h = tail.function();
  if (tail.kind == Tail::Kind::Mobius && tail.pole == par.x) throw Error(ErrorCode::InvalidTail, "tail has a pole at the node");
  if (par.even()) {
    h = augment(h, *par.params.s_extra, tail.augment_t.value_or(Rational(1)), par.x);
  } else if (tail.augment_t) {
    throw Error(ErrorCode::InvalidTail, "t= applies only when n is even");
  }
  RationalFunction<ComplexRational> f = lft_apply(par.chain, h);
  f = RationalFunction<ComplexRational>(f.num(), f.den(), par.x, par.residue);
  if (check) detail::require_exact_match(f, *check);
  return f;
}

// ---------------------------------------------------------------------------
// Construction for non-real data: reduce m times, solve the interior problem,
// augment back.

struct PipelineSolution {
  Rational x{0};
  Rational residue{0};
  std::size_t n = 0;
  std::vector<Rational> s, t;
  /// Targets of the innermost problem, Im inner[0] > 0.
  std::vector<ComplexRational> inner;
  InteriorInterpolant interior;

  template <class C>
  std::function<C(const C&)> evaluator() const {
    PickFromSchur<C> base(interior);
    C xc = to_complex<C>(x), res = to_complex<C>(residue);
    std::vector<C> sc, tc;
    for (std::size_t j = 0; j < s.size(); ++j) {
      sc.push_back(to_complex<C>(s[j]));
      tc.push_back(to_complex<C>(t[j]));
    }
    return [base, xc, res, sc, tc](const C& z) {
      C u = z - xc;
      C f = base(z);
      for (std::size_t j = sc.size(); j-- > 0;) f = sc[j] + tc[j] * u / (C(1) - tc[j] * u * f);
      return f + res / u;
    };
  }

  /// Radius about x inside which the function is analytic apart from the pole
  /// term, with room to spare; used for Cauchy quadrature.
  double analytic_radius() const {
    double r = 0.25;
    if (!interior.trivial()) {
      double x2 = x.get_d() * x.get_d();
      r = std::min(r, (1.0 + x2) / (16.0 * static_cast<double>(interior.N) * static_cast<double>(interior.m_exp)));
    }
    double next = std::abs(to_complex<std::complex<double>>(inner[0]));
    for (std::size_t j = s.size(); j-- > 0;) {
      r = std::min(r, 1.0 / (4.0 * t[j].get_d() * (next + 1.0)));
      next = std::abs(s[j].get_d());
    }
    return r;
  }
};

inline PipelineSolution build_pipeline(const ProblemData& p, const InteriorConfig& cfg = {}) {
  Verdict v = check_solvable(p);
  if (!v.rho || !v.solvable()) throw Error(ErrorCode::InvalidArgument, "pipeline needs solvable data with a non-real target");
  PipelineSolution out;
  out.x = p.x;
  out.residue = p.residue().re();
  out.n = p.n();
  TruncatedSeries<ComplexRational> stage{p.x, p.a};
  for (std::size_t j = 0; j < v.m; ++j) {
    const ComplexRational& s = stage.coeffs[0];
    const ComplexRational& t = stage.coeffs[1];
    if (!s.is_real() || !t.is_real() || sgn(t.re()) <= 0)
      throw Error(ErrorCode::InternalInconsistency, "level " + std::to_string(j + 1) + " parameters are not admissible");
    out.s.push_back(s.re());
    out.t.push_back(t.re());
    stage = reduce_series(stage);
  }
  out.inner = stage.coeffs;
  if (sgn(out.inner[0].im()) <= 0) throw Error(ErrorCode::InternalInconsistency, "reduced value is not interior");
  out.interior = build_schur_interpolant(transport_to_disc(ProblemData{p.x, std::nullopt, out.inner}), cfg);
  return out;
}

// ---------------------------------------------------------------------------

struct Solution {
  Verdict verdict;
  std::variant<RationalFunction<ComplexRational>, PipelineSolution> f;

  bool exact() const { return std::holds_alternative<RationalFunction<ComplexRational>>(f); }
  const RationalFunction<ComplexRational>& rational() const { return std::get<RationalFunction<ComplexRational>>(f); }
  const PipelineSolution& pipeline() const { return std::get<PipelineSolution>(f); }

  template <class C>
  std::function<C(const C&)> evaluator() const {
    if (exact()) {
      auto g = rational();
      return [g](const C& z) { return g.template evaluate<C>(z); };
    }
    return pipeline().template evaluator<C>();
  }
};

/// A concrete solution: the unique one, the member selected by the tail, or
/// the reduce/interior/augment construction for non-real data.
inline Solution solve(const ProblemData& p, const Tail& tail = {}, const InteriorConfig& cfg = {}) {
  Verdict v = check_solvable(p);
  if (!v.solvable()) throw UnsolvableError(v);
  if (v.determinate()) return {v, to_complex_rf(unique_solution(p))};
  if (v.rho) return {v, build_pipeline(p, cfg)};
  return {v, instantiate(parametrize(p), tail, &p)};
}

}  // namespace bcf

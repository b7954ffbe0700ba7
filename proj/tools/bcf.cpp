// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: classify, solve, params, verify and sample.
//
// Exit codes: 0 solvable (verify: all checks pass), 2 unsolvable (verify:
// some check fails), 1 malformed input or internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bcf/io.hpp"
#include "bcf/report.hpp"
#include "bcf/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnsolvable = 2;

struct Options {
  std::string file;
  std::string tail;
  std::string solution;
  std::uint64_t seed = 0;
  std::size_t grid = 0;
  std::vector<std::string> tol;
  double span = 1.0;
  double eta = 0.1;
};

void emit(const bcf::json& doc) { std::cout << doc.dump(2) << '\n'; }

struct Loaded {
  bcf::ProblemFile file;
  bcf::Tail tail;
};

Loaded load(const Options& o) {
  Loaded l{bcf::load_problem(o.file), {}};
  if (l.file.tail) l.tail = *l.file.tail;
  if (!o.tail.empty()) l.tail = bcf::parse_tail(o.tail);
  for (const auto& t : o.tol) bcf::apply_tolerance(l.file.tol, t);
  l.file.tol.seed = o.seed;
  if (o.grid > 0) l.file.tol.sample_grid = o.grid;
  return l;
}

int unsolvable(const bcf::Verdict& v) {
  emit(bcf::to_json(v));
  return kUnsolvable;
}

int cmd_classify(const Options& o) {
  auto l = load(o);
  auto v = bcf::check_solvable(l.file.problem);
  emit(bcf::to_json(v));
  return v.solvable() ? kOk : kUnsolvable;
}

int cmd_solve(const Options& o) {
  auto l = load(o);
  const auto& p = l.file.problem;
  auto v = bcf::check_solvable(p);
  if (!v.solvable()) return unsolvable(v);
  emit(bcf::solution_json(bcf::solve(p, l.tail), p));
  return kOk;
}

int cmd_params(const Options& o) {
  auto l = load(o);
  const auto& p = l.file.problem;
  auto v = bcf::check_solvable(p);
  if (!v.solvable()) return unsolvable(v);
  bcf::json doc = bcf::to_json(v);
  if (v.rho) {
    doc["note"] = "parametrization_unsupported";
  } else if (v.determinate()) {
    doc["params"] = bcf::to_json(bcf::compute_parameters(p));
    doc["note"] = "determinate";
  } else {
    doc.update(bcf::params_json(bcf::parametrize(p)));
  }
  emit(doc);
  return kOk;
}

bcf::SolutionFunction solution_for(const Options& o, const Loaded& l) {
  if (!o.solution.empty()) return bcf::parse_solution(bcf::read_file(o.solution));
  auto s = bcf::solve(l.file.problem, l.tail);
  return s.f;
}

int cmd_verify(const Options& o) {
  auto l = load(o);
  const auto& p = l.file.problem;
  auto v = bcf::check_solvable(p);
  if (!v.solvable()) return unsolvable(v);
  auto report = bcf::verify_solution(p, solution_for(o, l), l.file.tol);
  emit(bcf::to_json(report));
  return report.passed() ? kOk : kUnsolvable;
}

int cmd_sample(const Options& o) {
  using C = std::complex<double>;
  auto l = load(o);
  const auto& p = l.file.problem;
  auto v = bcf::check_solvable(p);
  if (!v.solvable()) return unsolvable(v);
  auto f = solution_for(o, l);
  std::function<C(const C&)> ev;
  if (const auto* g = std::get_if<bcf::RationalFunction<bcf::ComplexRational>>(&f)) {
    auto fn = *g;
    ev = [fn](const C& z) { return fn.evaluate<C>(z); };
  } else {
    ev = std::get<bcf::PipelineSolution>(f).evaluator<C>();
  }
  const std::size_t n = l.file.tol.sample_grid;
  const double x = p.x.get_d();
  std::printf("# re_z im_z re_f im_f\n");
  for (std::size_t k = 0; k < n; ++k) {
    double frac = n == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n - 1);
    C z(x - o.span + 2.0 * o.span * frac, o.eta);
    C w = ev(z);
    std::printf("%.17g %.17g %.17g %.17g\n", z.real(), z.imag(), w.real(), w.imag());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary Caratheodory-Fejer interpolation in the Pick class"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "problem document (JSON)")->required();
    sub->add_option("--tail", o.tail, "tail: const:c | affine:a,b | mobius:p,q, optional ;t=v");
  };
  auto add_checks = [&](CLI::App* sub) {
    sub->add_option("--solution", o.solution, "solution document from 'solve'; solved afresh when absent");
    sub->add_option("--seed", o.seed, "seed for grid jitter (0 = regular grid)");
    sub->add_option("--tol", o.tol,
                    "override key=value; keys: psd_eig_tol (1e-9), taylor_rel_tol (1e-6), im_floor (-1e-9), "
                    "pick_radial (100), pick_angular (100), boundary_grid (4096), sample_grid (256), quadrature_points (128)");
  };

  auto* classify = app.add_subcommand("classify", "decide solvability and determinacy");
  add_common(classify);
  auto* solve = app.add_subcommand("solve", "construct a solution");
  add_common(solve);
  auto* params = app.add_subcommand("params", "reduction parameters and the linear fractional parametrization");
  add_common(params);
  auto* verify = app.add_subcommand("verify", "check a solution with floating-point oracles");
  add_common(verify);
  add_checks(verify);
  auto* sample = app.add_subcommand("sample", "tabulate f along a horizontal line above the node");
  add_common(sample);
  add_checks(sample);
  sample->add_option("--grid", o.grid, "number of points (default 256)");
  sample->add_option("--span", o.span, "half-width of the line around x (default 1)");
  sample->add_option("--eta", o.eta, "height above the real axis (default 0.1)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*solve) return cmd_solve(o);
    if (*params) return cmd_params(o);
    if (*verify) return cmd_verify(o);
    if (*sample) return cmd_sample(o);
  } catch (const bcf::UnsolvableError& e) {
    return unsolvable(e.verdict());
  } catch (const std::exception& e) {
    std::cerr << "bcf: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/lft.hpp"
#include "bcf/number.hpp"
#include "bcf/solver.hpp"
#include "bcf/tail.hpp"
#include "bcf/verify.hpp"

namespace bcf {

using json = nlohmann::json;

/// Contents of a problem document.
///
///   {"x": "0", "a_neg1": "-1", "a": ["0", "1", "1/2+i"],
///    "tail": "const:0", "tol": {"taylor_rel_tol": 1e-8}}
struct ProblemFile {
  ProblemData problem;
  std::optional<Tail> tail;
  ToleranceConfig tol;
};

namespace detail {

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed document");
  }
}

inline const std::string& string_field(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get_ref<const std::string&>();
}

inline Rational rational_field(const json& v, const std::string& field) {
  auto q = try_parse_rational(string_field(v, field));
  if (!q) field_error(field, "invalid rational '" + v.get<std::string>() + "'");
  return *q;
}

inline ComplexRational complex_field(const json& v, const std::string& field) {
  auto z = try_parse_complex(string_field(v, field));
  if (!z) field_error(field, "invalid complex rational '" + v.get<std::string>() + "'");
  return *z;
}

inline std::vector<ComplexRational> complex_array(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array");
  std::vector<ComplexRational> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(complex_field(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::vector<Rational> rational_array(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rational_field(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::size_t count_field(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) field_error(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

inline const json& require(const json& obj, const std::string& key, const std::string& where = "") {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where + key, "missing");
  return *it;
}

}  // namespace detail

/// Applies one "key=value" override.
inline void apply_tolerance(ToleranceConfig& tol, const std::string& key, double value) {
  auto count = [&](std::size_t& slot) {
    if (!(value >= 1) || value != static_cast<double>(static_cast<std::size_t>(value)))
      throw Error(ErrorCode::InvalidArgument, "'" + key + "' must be a positive integer");
    slot = static_cast<std::size_t>(value);
  };
  if (key == "psd_eig_tol") {
    tol.psd_eig_tol = value;
  } else if (key == "taylor_rel_tol") {
    tol.taylor_rel_tol = value;
  } else if (key == "im_floor") {
    tol.im_floor = value;
  } else if (key == "pick_radial") {
    count(tol.pick_radial);
  } else if (key == "pick_angular") {
    count(tol.pick_angular);
  } else if (key == "boundary_grid") {
    count(tol.boundary_grid);
  } else if (key == "sample_grid") {
    count(tol.sample_grid);
  } else if (key == "quadrature_points") {
    count(tol.quadrature_points);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + key + "'");
  }
  tol.validate();
}

inline void apply_tolerance(ToleranceConfig& tol, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "tolerance override must be key=value");
  std::string key = assignment.substr(0, eq), text = assignment.substr(eq + 1);
  double value = 0;
  std::istringstream in(text);
  if (!(in >> value) || !in.eof()) throw Error(ErrorCode::InvalidArgument, "bad value for '" + key + "'");
  apply_tolerance(tol, key, value);
}

inline ProblemFile parse_problem(std::string_view text) {
  json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "problem document must be an object");
  ProblemFile out;
  out.problem.x = detail::rational_field(detail::require(doc, "x"), "x");
  if (auto it = doc.find("a_neg1"); it != doc.end() && !it->is_null()) out.problem.a_neg1 = detail::complex_field(*it, "a_neg1");
  out.problem.a = detail::complex_array(detail::require(doc, "a"), "a");
  if (out.problem.a.empty()) detail::field_error("a", "needs at least one target");
  if (auto it = doc.find("tail"); it != doc.end() && !it->is_null()) {
    try {
      out.tail = parse_tail(detail::string_field(*it, "tail"));
    } catch (const Error& e) {
      detail::field_error("tail", e.what());
    }
  }
  if (auto it = doc.find("tol"); it != doc.end()) {
    if (!it->is_object()) detail::field_error("tol", "expected an object");
    for (auto& [key, value] : it->items()) {
      if (!value.is_number()) detail::field_error("tol." + key, "expected a number");
      try {
        apply_tolerance(out.tol, key, value.get<double>());
      } catch (const Error& e) {
        detail::field_error("tol." + key, e.what());
      }
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "x" && key != "a_neg1" && key != "a" && key != "tail" && key != "tol") detail::field_error(key, "unknown field");
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

// ---------------------------------------------------------------------------
// Output documents. Exact values are rational strings; keys are sorted.

template <class T>
json to_json(const std::vector<T>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

template <class T>
json to_json(const Poly<T>& p) {
  return to_json(p.coeffs());
}

inline json to_json(const Classification& c) {
  return {{"tag", std::string(to_string(c.tag))}, {"rank", c.rank}, {"leading_minors", to_json(c.leading_minors)}};
}

inline json to_json(const Verdict& v) {
  json out;
  out["status"] = std::string(to_string(v.status));
  out["reason"] = std::string(to_string(v.reason));
  out["rho"] = v.rho ? json(*v.rho) : json("infinity");
  out["m"] = v.m;
  out["rank"] = v.rank;
  out["determinacy_basis"] = std::string(to_string(v.basis));
  if (v.classification) {
    out["classification"] = std::string(to_string(v.classification->tag));
    out["leading_minors"] = to_json(v.classification->leading_minors);
  } else {
    out["classification"] = nullptr;
    out["leading_minors"] = json::array();
  }
  return out;
}

inline json to_json(const RationalFunction<ComplexRational>& f) {
  return {{"num", to_json(f.num())},
          {"den", to_json(f.den())},
          {"pole_node", to_string(f.pole_node())},
          {"pole_residue", to_string(f.pole_residue())},
          {"degree", f.degree()}};
}

inline json to_json(const InteriorInterpolant& s) {
  return {{"tau", to_string(s.tau)},       {"b", to_json(s.b)},   {"center", to_string(s.center)},
          {"reduced", to_json(s.reduced)}, {"q", s.q},            {"lead", to_string(s.lead)},
          {"Q", to_json(s.Q)},             {"m_exp", s.m_exp},    {"N", s.N},
          {"epsilon", s.epsilon}};
}

inline json to_json(const PipelineSolution& p) {
  return {{"x", to_string(p.x)}, {"residue", to_string(p.residue)}, {"n", p.n},
          {"s", to_json(p.s)},   {"t", to_json(p.t)},               {"inner", to_json(p.inner)},
          {"interior", to_json(p.interior)}};
}

inline json to_json(const LftMatrix& m) {
  return {{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

inline json to_json(const ParameterTable& t) {
  json stages = json::array();
  for (const auto& st : t.stages) stages.push_back(to_json(st.coeffs));
  return {{"m", t.m},
          {"depth", t.depth},
          {"s", to_json(t.s)},
          {"t", to_json(t.t)},
          {"terminal", t.terminal ? json(to_string(*t.terminal)) : json(nullptr)},
          {"s_extra", t.s_extra ? json(to_string(*t.s_extra)) : json(nullptr)},
          {"stages", stages}};
}

inline json to_json(const Check& c) {
  json out = {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"threshold", c.threshold}, {"detail", c.detail}};
  if (c.worst_point) out["worst_point"] = {c.worst_point->real(), c.worst_point->imag()};
  return out;
}

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

/// Solution document: the verdict, the function and the echoed Taylor data.
inline json solution_json(const Solution& s, const ProblemData& p) {
  json out = to_json(s.verdict);
  out["x"] = to_string(p.x);
  out["n"] = p.n();
  if (s.exact()) {
    out["kind"] = "rational";
    out["function"] = to_json(s.rational());
    auto l = laurent_at(s.rational(), p.x, p.n());
    out["taylor"] = to_json(l.taylor.coeffs);
    out["laurent_residue"] = to_string(l.residue);
  } else {
    out["kind"] = "pipeline";
    out["function"] = to_json(s.pipeline());
    out["taylor"] = to_json(p.a);
    out["laurent_residue"] = to_string(p.residue());
  }
  return out;
}

/// A function read back from a solution document.
using SolutionFunction = std::variant<RationalFunction<ComplexRational>, PipelineSolution>;

inline SolutionFunction parse_solution(std::string_view text) {
  json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "solution document must be an object");
  const std::string kind = detail::string_field(detail::require(doc, "kind"), "kind");
  const json& f = detail::require(doc, "function");
  if (kind == "rational") {
    auto num = detail::complex_array(detail::require(f, "num", "function."), "function.num");
    auto den = detail::complex_array(detail::require(f, "den", "function."), "function.den");
    Rational node = detail::rational_field(detail::require(f, "pole_node", "function."), "function.pole_node");
    Rational res = detail::rational_field(detail::require(f, "pole_residue", "function."), "function.pole_residue");
    if (sgn(res) > 0) detail::field_error("function.pole_residue", "must be non-positive");
    Poly<ComplexRational> d(den);
    if (d.is_zero()) detail::field_error("function.den", "zero denominator");
    return RationalFunction<ComplexRational>(Poly<ComplexRational>(num), d, node, res);
  }
  if (kind == "pipeline") {
    PipelineSolution p;
    p.x = detail::rational_field(detail::require(f, "x", "function."), "function.x");
    p.residue = detail::rational_field(detail::require(f, "residue", "function."), "function.residue");
    p.n = detail::count_field(detail::require(f, "n", "function."), "function.n");
    p.s = detail::rational_array(detail::require(f, "s", "function."), "function.s");
    p.t = detail::rational_array(detail::require(f, "t", "function."), "function.t");
    if (p.s.size() != p.t.size()) detail::field_error("function.t", "length differs from s");
    p.inner = detail::complex_array(detail::require(f, "inner", "function."), "function.inner");
    if (p.inner.empty()) detail::field_error("function.inner", "empty");
    const json& in = detail::require(f, "interior", "function.");
    const std::string w = "function.interior.";
    InteriorInterpolant& s = p.interior;
    s.tau = detail::complex_field(detail::require(in, "tau", w), w + "tau");
    s.b = detail::complex_array(detail::require(in, "b", w), w + "b");
    s.center = detail::complex_field(detail::require(in, "center", w), w + "center");
    s.reduced = detail::complex_array(detail::require(in, "reduced", w), w + "reduced");
    s.q = detail::count_field(detail::require(in, "q", w), w + "q");
    s.lead = detail::complex_field(detail::require(in, "lead", w), w + "lead");
    s.Q = detail::complex_array(detail::require(in, "Q", w), w + "Q");
    s.m_exp = detail::count_field(detail::require(in, "m_exp", w), w + "m_exp");
    s.N = detail::count_field(detail::require(in, "N", w), w + "N");
    const json& eps = detail::require(in, "epsilon", w);
    if (!eps.is_number()) detail::field_error(w + "epsilon", "expected a number");
    s.epsilon = eps.get<double>();
    if (s.N == 0 || s.m_exp == 0) detail::field_error(w + "N", "N and m_exp must be positive");
    if (!s.trivial() && s.Q.empty()) detail::field_error(w + "Q", "empty");
    return p;
  }
  detail::field_error("kind", "expected 'rational' or 'pipeline'");
}

inline json params_json(const Parametrization& par) {
  json out;
  out["x"] = to_string(par.x);
  out["n"] = par.n;
  out["residue"] = to_string(par.residue);
  out["params"] = to_json(par.params);
  out["lft"] = to_json(par.chain);
  out["K"] = to_string(par.K);
  out["det"] = to_json(par.chain.det());
  out["tail_contract"] = par.tail_contract();
  return out;
}

}  // namespace bcf

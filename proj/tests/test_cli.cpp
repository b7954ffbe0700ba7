// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end tests of the command-line tool over the shipped fixtures.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "bcf/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BCF_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(BCF_FIXTURES) + "/" + name + ".json"; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "bcf_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Expected classify exit code for every shipped fixture.
const std::map<std::string, int> kExpected = {
    {"nevanlinna_counterexample", 2}, {"determinate_z", 0},       {"determinate_geometric", 0},
    {"determinate_pole", 0},          {"indeterminate_identity", 0}, {"indeterminate_even", 0},
    {"rho_odd", 2},                   {"residue_positive", 2},    {"even_rank_pass", 0},
    {"even_rank_fail", 2},            {"interior_value", 0},      {"complex_rho2", 0},
    {"complex_im_negative", 2},       {"malformed", 1},
};

TEST(Cli, EveryFixtureIsCovered) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(BCF_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    EXPECT_TRUE(kExpected.count(entry.path().stem().string())) << entry.path();
  }
  EXPECT_EQ(count, kExpected.size());
}

TEST(Cli, ExitCodesOverFixtures) {
  for (const auto& [name, code] : kExpected) {
    for (const char* cmd : {"classify", "solve", "params", "verify"}) EXPECT_EQ(run(std::string(cmd) + " " + fixture(name)).code, code) << cmd << " " << name;
  }
}

TEST(Cli, ClassifyCounterexample) {
  auto r = run("classify " + fixture("nevanlinna_counterexample"));
  auto doc = bcf::json::parse(r.out);
  EXPECT_EQ(doc["status"], "unsolvable");
  EXPECT_EQ(doc["reason"], "hankel_not_pd_not_se_minimal");
  EXPECT_EQ(doc["leading_minors"], bcf::json({"1", "0", "0"}));
  EXPECT_EQ(bcf::json::parse(run("classify " + fixture("determinate_z")).out)["status"], "solvable_determinate");
}

TEST(Cli, SolveEmitsExactFunction) {
  auto doc = bcf::json::parse(run("solve " + fixture("determinate_geometric")).out);
  EXPECT_EQ(doc["function"]["num"], bcf::json({"0", "-1"}));
  EXPECT_EQ(doc["function"]["den"], bcf::json({"-1", "1"}));
  EXPECT_EQ(doc["function"]["degree"], 1);
  EXPECT_EQ(doc["taylor"], bcf::json({"0", "1", "1", "1"}));
}

TEST(Cli, TailFlagOverridesDocument) {
  auto a = bcf::json::parse(run("solve " + fixture("indeterminate_identity")).out);
  auto b = bcf::json::parse(run("solve " + fixture("indeterminate_identity") + " --tail affine:1,0").out);
  EXPECT_NE(a["function"], b["function"]);
  EXPECT_EQ(a["taylor"], b["taylor"]);
  EXPECT_EQ(run("solve " + fixture("indeterminate_identity") + " --tail bogus").code, 1);
}

TEST(Cli, Params) {
  auto pd = bcf::json::parse(run("params " + fixture("indeterminate_identity")).out);
  for (const auto& t : pd["params"]["t"]) EXPECT_GT(bcf::parse_rational(t.get<std::string>()), 0);
  EXPECT_EQ(pd["tail_contract"], "pick_function_analytic_at_x");
  auto se = bcf::json::parse(run("params " + fixture("determinate_geometric")).out);
  EXPECT_EQ(se["params"]["terminal"], "1");
  EXPECT_EQ(se["note"], "determinate");
  auto cx = bcf::json::parse(run("params " + fixture("complex_rho2")).out);
  EXPECT_EQ(cx["note"], "parametrization_unsupported");
}

TEST(Cli, VerifyIsDeterministicAndDetectsTampering) {
  for (const std::string name : {"determinate_pole", "indeterminate_even", "complex_rho2"}) {
    auto sol = scratch(name + ".solution.json");
    write(sol, run("solve " + fixture(name)).out);
    auto first = run("verify " + fixture(name) + " --solution " + sol.string() + " --seed 5");
    auto second = run("verify " + fixture(name) + " --solution " + sol.string() + " --seed 5");
    EXPECT_EQ(first.code, 0) << first.out;
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(bcf::json::parse(first.out)["seed"], 5);
  }
  auto doc = bcf::json::parse(run("solve " + fixture("determinate_geometric")).out);
  doc["function"]["num"] = bcf::json({"0", "-2"});
  auto tampered = scratch("tampered.json");
  write(tampered, doc.dump());
  auto r = run("verify " + fixture("determinate_geometric") + " --solution " + tampered.string());
  EXPECT_EQ(r.code, 2);
  auto report = bcf::json::parse(r.out);
  EXPECT_FALSE(report["passed"].get<bool>());
  for (const auto& c : report["checks"]) {
    if (c["name"] == "taylor_match") {
      EXPECT_FALSE(c["passed"].get<bool>());
    }
  }
}

TEST(Cli, ToleranceOverride) {
  EXPECT_EQ(run("verify " + fixture("determinate_z") + " --tol taylor_rel_tol=1e-8 --tol pick_radial=10").code, 0);
  EXPECT_EQ(run("verify " + fixture("determinate_z") + " --tol nonsense=1").code, 1);
}

TEST(Cli, SampleTable) {
  auto r = run("sample " + fixture("determinate_z") + " --grid 3");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header[0], '#');
  int rows = 0;
  double re_z, im_z, re_f, im_f;
  while (in >> re_z >> im_z >> re_f >> im_f) {
    ++rows;
    EXPECT_DOUBLE_EQ(im_f, im_z);
    EXPECT_DOUBLE_EQ(re_f, re_z);
  }
  EXPECT_EQ(rows, 3);

  auto full = run("sample " + fixture("complex_rho2"));
  std::size_t lines = 0;
  for (char c : full.out) lines += c == '\n';
  EXPECT_EQ(lines, 257u);
  EXPECT_EQ(full.out, run("sample " + fixture("complex_rho2")).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("classify").code, 1);
  EXPECT_EQ(run("classify /nonexistent/file.json").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace

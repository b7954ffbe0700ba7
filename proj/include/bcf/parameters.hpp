// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcf/number.hpp"
#include "bcf/series.hpp"

namespace bcf {

/// Reduction parameters of real data: s_j = a^0(j), t_j = a^1(j), where
/// a(1) = a and a(j+1) is the reduction of a(j).
struct ParameterTable {
  Rational x{0};
  std::size_t m = 0;
  /// Number of active levels; t_1..t_depth > 0.
  std::size_t depth = 0;
  std::vector<Rational> s;
  std::vector<Rational> t;
  /// s_{depth+1} when the recursion terminates before level m + 1 (t = 0).
  std::optional<Rational> terminal;
  /// s_{m+1} = a^2(m) / a^1(m)^2 for even n with all m levels active.
  std::optional<Rational> s_extra;
  /// The sequences a(1), a(2), ... that produced the table.
  std::vector<TruncatedSeries<Rational>> stages;

  bool terminates() const { return terminal.has_value(); }

  /// prod t_k^2 over the active levels.
  Rational lft_constant() const {
    Rational k(1);
    for (const auto& v : t) k *= v * v;
    return k;
  }
};

}  // namespace bcf

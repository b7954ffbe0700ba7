// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcf {

enum class ErrorCode {
  DegenerateDerivative,
  InvalidAugmentation,
  NonRealEntry,
  SingularPivot,
  PoleAtNode,
  DegenerateLft,
  InvalidTail,
  TrivialProblem,
  NotDeterminate,
  NotIndeterminate,
  InternalInconsistency,
  ParametrizationUnsupported,
  NotInterior,
  NotSchurData,
  SelectionBudgetExceeded,
  InvalidArgument,
  ParseError,
  Unsolvable,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateDerivative: return "degenerate_derivative";
    case ErrorCode::InvalidAugmentation: return "invalid_augmentation";
    case ErrorCode::NonRealEntry: return "non_real_entry";
    case ErrorCode::SingularPivot: return "singular_pivot";
    case ErrorCode::PoleAtNode: return "pole_at_node";
    case ErrorCode::DegenerateLft: return "degenerate_lft";
    case ErrorCode::InvalidTail: return "invalid_tail";
    case ErrorCode::TrivialProblem: return "trivial_problem";
    case ErrorCode::NotDeterminate: return "not_determinate";
    case ErrorCode::NotIndeterminate: return "not_indeterminate";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
    case ErrorCode::ParametrizationUnsupported: return "parametrization_unsupported";
    case ErrorCode::NotInterior: return "not_interior";
    case ErrorCode::NotSchurData: return "not_schur_data";
    case ErrorCode::SelectionBudgetExceeded: return "selection_budget_exceeded";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::Unsolvable: return "unsolvable";
  }
  return "unknown";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bcf

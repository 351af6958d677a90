#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psigma/characters.hpp"
#include "psigma/limits.hpp"

namespace psigma::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock budget; exceeding it fails the criterion.
  std::optional<double> budget_seconds;
};

inline constexpr int criterion_count = 11;

/// Runs criterion `id` (1-based) against the shared table store. Exceptions
/// from the library are caught and reported as failures.
CriterionResult run_criterion(int id, TableStore &tables);

/// Runs every criterion in order, calling `report` after each one.
std::vector<CriterionResult>
run_all(TableStore &tables,
        std::function<void(CriterionResult const &)> const &report = {});

/// "[PASS] 01 title (3.2 s): detail"
std::string format_line(CriterionResult const &r);

} // namespace psigma::acceptance

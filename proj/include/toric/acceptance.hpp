#pragma once

// End-to-end acceptance checks. Each criterion builds its own scenario,
// runs it and compares against an independent oracle or a fitted rate.

#include <string>
#include <vector>

namespace toric {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;  // runtime limit in seconds
};

inline constexpr int kCriterionCount = 11;

/// Runs criterion `id` in 1..kCriterionCount. The runtime limit is part of
/// the verdict.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

/// One line: "criterion <id> [PASS|FAIL] <name> (<seconds>s): <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace toric

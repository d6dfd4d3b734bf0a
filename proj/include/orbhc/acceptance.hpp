#pragma once

// End-to-end checks: the numbered acceptance criteria and the invariant
// suites of each module. Used by the acceptance binary and `orbhc selftest`.

#include <functional>
#include <string>
#include <vector>

namespace orbhc {

struct CheckResult {
  std::string id;     // "1".."8" for criteria, "<module>/<name>" for invariants
  std::string title;
  bool passed = false;
  std::string detail;  // first failures, or the exception text
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no runtime bound
};

inline constexpr int kCriterionCount = 8;

// Criterion k in 1..8 (InvalidArgument otherwise). A criterion fails if any
// of its exact identities fails, it throws, or it exceeds its time budget.
CheckResult run_criterion(int k);
std::vector<CheckResult> run_acceptance();

std::vector<CheckResult> run_invariant_suite();

// Criteria followed by the invariant suite. `progress` is called after
// each check.
std::vector<CheckResult> run_selftest(const std::function<void(const CheckResult&)>& progress = {});

std::string format_result(const CheckResult& r);

}  // namespace orbhc

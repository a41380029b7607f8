#pragma once

// Built-in invariant suite covering every module. `Quick` shrinks sample
// counts and image sizes; `Full` runs the documented sizes.

#include <functional>
#include <string>
#include <vector>

namespace ucb {

enum class CheckLevel { Quick, Full };

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Called after each check finishes, e.g. for progress output.
using CheckObserver = std::function<void(const CheckResult&)>;

std::vector<CheckResult> run_selfcheck(CheckLevel level, const CheckObserver& observer = {});

}  // namespace ucb

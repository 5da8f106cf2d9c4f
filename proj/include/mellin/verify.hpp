#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mellin::verify {

struct CheckResult {
  std::string module;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every module invariant, evaluated on the built-in corpus at the reference resolutions.
/// `progress` is called after each check.
std::vector<CheckResult> run_invariant_suite(const std::function<void(const CheckResult&)>& progress = {});

}  // namespace mellin::verify

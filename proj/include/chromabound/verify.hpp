#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chromabound {

struct CheckResult {
  std::string name;
  bool passed = false;
  // Counterexample or summary.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// theta, bounds, combinatorics, tensor.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(std::string_view name, unsigned threads = 1);

}  // namespace chromabound

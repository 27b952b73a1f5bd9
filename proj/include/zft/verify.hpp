#pragma once

// Named end-to-end check suites. Every expected value is pinned inline; each
// suite cross-validates a search result against a formula, an independent
// oracle, or an exhaustive enumeration.

#include <string>
#include <vector>

namespace zft {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown name. Exceptions inside a suite
// become failures, not crashes.
SuiteResult run_suite(const std::string& name);

std::vector<SuiteResult> run_all_suites();

}  // namespace zft

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qinv3 {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  ///< first counterexample, empty when passed
};

/// Named pass/fail checks, in the order they ran.
struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Throws SpecError for an unknown name.
  const CheckResult& check(std::string_view name) const;
  /// One "name: pass" / "name: FAIL witness" line per check.
  std::string to_string() const;
};

}  // namespace qinv3

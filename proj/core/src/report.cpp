#include "qinv3/report.hpp"

#include "qinv3/error.hpp"

#include <algorithm>
#include <sstream>

namespace qinv3 {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw SpecError("no check named '" + std::string(name) + "'");
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed) out << " " << c.witness;
    out << '\n';
  }
  return out.str();
}

}  // namespace qinv3

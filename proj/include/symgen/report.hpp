#ifndef SYMGEN_REPORT_HPP
#define SYMGEN_REPORT_HPP

#include <string>
#include <vector>

namespace symgen {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Named pass/fail results; failures are carried, never thrown.
struct CheckReport {
  std::string title;
  std::vector<Check> checks;
  // Informational lines that are neither passes nor failures.
  std::vector<std::string> warnings;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(CheckReport const& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }
  bool passed() const {
    for (auto const& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  std::string to_text() const {
    std::string out;
    if (!title.empty()) out += title + "\n";
    for (auto const& c : checks) {
      out += std::string(c.passed ? "  [pass] " : "  [FAIL] ") + c.name;
      if (!c.detail.empty()) out += "  (" + c.detail + ")";
      out += "\n";
    }
    for (auto const& w : warnings) out += "  [warn] " + w + "\n";
    return out;
  }
};

}  // namespace symgen

#endif  // SYMGEN_REPORT_HPP

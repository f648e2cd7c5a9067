#pragma once

#include <string>
#include <vector>

namespace laxcenter {

/// Verdict of one named verification, with the witnesses of any failure.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct CheckList {
  std::vector<CheckResult> checks;

  bool passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failures() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
  CheckResult& add(std::string name, bool passed, std::string detail = {},
                   std::vector<std::string> witnesses = {}) {
    checks.push_back({std::move(name), passed, std::move(detail), std::move(witnesses)});
    return checks.back();
  }
  void append(const CheckList& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace laxcenter

#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace ridgebound {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Named pass/fail checks. A report passes iff every check passes.
struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
};

}  // namespace ridgebound

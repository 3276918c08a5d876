#pragma once

#include <string>
#include <vector>

#include "od/term.hpp"

namespace od {

// One named condition checked against a candidate diagram.
struct CheckEntry {
  std::string label;
  bool passed = false;
  std::string detail;
};

// Structured pass/fail per condition for one subject term.
// `valid` is true iff every entry passed.
struct ValidityReport {
  Term subject;
  std::vector<CheckEntry> checks;
  bool valid = true;

  void add(std::string label, bool passed, std::string detail = "") {
    if (!passed) valid = false;
    checks.push_back({std::move(label), passed, std::move(detail)});
  }

  void merge(const ValidityReport& other) {
    for (const auto& c : other.checks) add(c.label, c.passed, c.detail);
  }
};

}  // namespace od

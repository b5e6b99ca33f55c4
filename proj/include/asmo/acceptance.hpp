#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace asmo {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;            // one line, no timings
  nlohmann::ordered_json detail;  // measured values and the pinned tolerances
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  // One "criterion N: PASS|FAIL title: summary" line per criterion.
  std::string lines() const;
};

// Criteria 1 to 10, each run once.
std::vector<CriterionResult> run_core_criteria();

// Criteria 1 to 10, then 11: the report for 1 to 10 is produced a second time,
// with a different worker count, and compared byte for byte with the first.
AcceptanceReport run_acceptance();

}  // namespace asmo

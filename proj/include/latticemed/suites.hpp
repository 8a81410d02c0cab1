#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace latmed {

/// Knobs shared by every suite. Zero means "use the suite's pinned default";
/// effective values are recorded in the report, so runs replay exactly.
struct SuiteConfig {
  std::uint64_t seed = 1;
  double tol = 0;
  long trials = 0;
  int max_poset = 5;
};

struct CaseResult {
  std::string id;
  std::string verdict;  // "pass", "fail", "expected-fail: confirmed", ...
  bool ok = true;
  std::string witness;
  std::string lhs, rhs;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tol = 0;
  long trials = 0;
  int max_poset = 0;
  std::vector<CaseResult> cases;

  long passed() const;
  long failed() const;
  bool ok() const { return failed() == 0; }
};

nlohmann::json suite_report_to_json(const SuiteReport& report);

const std::vector<std::string>& suite_names();

/// Runs one named suite; unknown names raise std::invalid_argument listing
/// the available suites.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace latmed

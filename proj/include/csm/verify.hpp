#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "csm/matroid.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool all_passed() const;
  std::size_t failures() const;
};

// "balance", "hvector", "valuation", "pushforward" or "gpoly". Matroids are
// drawn from the catalog with at most `max_size` elements. Throws
// InvalidParameters for an unknown suite name. Cases come back sorted by name.
SuiteReport run_suite(const std::string& suite, int max_size);

const std::vector<std::string>& suite_names();

// csm_k(M), or the zero k-cycle on M's ground set when k exceeds rank - 1.
TropicalCycle csm_cycle_or_zero(const Matroid& m, int k);

// pushforward(csm_k(M), i) == csm_k(M∖i) - csm_k(M/i) for a non-coloop i.
bool check_pushforward(const Matroid& m, int element, int k, std::string* detail = nullptr);

nlohmann::json report_to_json(const SuiteReport& report);
std::string report_to_table(const SuiteReport& report);

}  // namespace csm

#include "csm/verify.hpp"

#include <algorithm>
#include <functional>

#include "csm/bergman.hpp"
#include "csm/catalog.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"
#include "csm/intersection.hpp"
#include "csm/invariants.hpp"
#include "csm/polytope.hpp"

namespace csm {

namespace {

std::vector<NamedMatroid> loopless_catalog(int max_size) {
  std::vector<NamedMatroid> out;
  for (NamedMatroid& nm : catalog(max_size, std::min(max_size, 6))) {
    if (nm.matroid.size() <= max_size && !nm.matroid.has_loop()) out.push_back(std::move(nm));
  }
  return out;
}

// Runs fn, turning a library exception into a failed case.
CaseResult run_case(std::string name, const std::function<bool(std::string&)>& fn) {
  CaseResult result{std::move(name), false, ""};
  try {
    result.passed = fn(result.detail);
  } catch (const std::exception& e) {
    result.detail = std::string("error: ") + e.what();
  }
  return result;
}

void balance_suite(SuiteReport& report, int max_size) {
  for (const NamedMatroid& nm : loopless_catalog(max_size)) {
    for (int k = 0; k < nm.matroid.rank(); ++k) {
      report.cases.push_back(run_case(nm.name + " k=" + std::to_string(k), [&](std::string& detail) {
        const BalanceReport b = check_balanced(csm_cycle(nm.matroid, k));
        if (!b.balanced) detail = "unbalanced at " + b.witness->to_string();
        if (!b.normals_match_generators) detail += " lattice normal differs from the chain generator";
        return b.balanced && b.normals_match_generators;
      }));
    }
  }
}

void hvector_suite(SuiteReport& report, int max_size) {
  for (const NamedMatroid& nm : loopless_catalog(max_size)) {
    report.cases.push_back(run_case(nm.name, [&](std::string& detail) {
      const IntPolynomial by_intersection = degree_polynomial_by_intersection(nm.matroid);
      const IntPolynomial by_recursion = degree_polynomial_by_recursion(nm.matroid);
      const IntPolynomial shift = shifted_reduced_characteristic(nm.matroid);
      detail = "intersection " + by_intersection.to_string() + ", recursion " + by_recursion.to_string() +
               ", shifted reduced characteristic " + shift.to_string();
      return by_intersection == by_recursion && by_recursion == shift;
    }));
  }
}

void valuation_suite(SuiteReport& report, int max_size) {
  for (const NamedSubdivision& ns : octahedron_splits()) {
    report.cases.push_back(run_case("octahedron " + ns.name, [&](std::string& detail) {
      const SubdivisionReport v = validate_subdivision(ns.subdivision);
      if (!v.valid) {
        detail = "invalid (" + v.clause + "): " + v.message;
        return false;
      }
      const bool k0 = check_csm_valuation(ns.subdivision, 0);
      const bool k1 = check_csm_valuation(ns.subdivision, 1);
      const bool b = check_beta_valuation(ns.subdivision);
      detail = std::string("csm_0 ") + (k0 ? "ok" : "FAIL") + ", csm_1 " + (k1 ? "ok" : "FAIL") + ", beta " +
               (b ? "ok" : "FAIL");
      return k0 && k1 && b;
    }));
  }
  for (const NamedMatroid& nm : loopless_catalog(max_size)) {
    report.cases.push_back(run_case("trivial " + nm.name, [&](std::string& detail) {
      const Subdivision sub{nm.matroid, {nm.matroid}};
      const SubdivisionReport v = validate_subdivision(sub);
      if (!v.valid) {
        detail = "invalid (" + v.clause + "): " + v.message;
        return false;
      }
      for (int k = 0; k < nm.matroid.rank(); ++k) {
        if (!check_csm_valuation(sub, k)) {
          detail = "csm_" + std::to_string(k) + " identity fails";
          return false;
        }
      }
      return check_beta_valuation(sub);
    }));
  }
}

void pushforward_suite(SuiteReport& report, int max_size) {
  for (const NamedMatroid& nm : loopless_catalog(max_size)) {
    const ElementSet coloops = nm.matroid.coloops();
    for (int i = 0; i < nm.matroid.size(); ++i) {
      if (coloops.contains(i)) continue;
      report.cases.push_back(run_case(nm.name + " i=" + std::to_string(i), [&](std::string& detail) {
        for (int k = 0; k < nm.matroid.rank(); ++k) {
          if (!check_pushforward(nm.matroid, i, k, &detail)) return false;
        }
        return true;
      }));
    }
  }
}

void gpoly_suite(SuiteReport& report, int max_size) {
  report.cases.push_back(run_case("uniform U2,4", [](std::string& detail) {
    const IntPolynomial g = g_polynomial_uniform(2, 4);
    detail = g.to_string();
    return g == IntPolynomial({0, 2, 1});
  }));
  for (int m = 4; m <= max_size; ++m) {
    report.cases.push_back(run_case("rank3 agrees U3," + std::to_string(m), [&](std::string& detail) {
      const IntPolynomial uniform = g_polynomial_uniform(3, m);
      const IntPolynomial rank3 = g_polynomial_rank3(Matroid::uniform(3, m));
      detail = "closed form " + uniform.to_string() + ", rank-3 formula " + rank3.to_string();
      return uniform == rank3;
    }));
  }
  for (int m = 2; m <= max_size; ++m) {
    for (int r = 1; r < m; ++r) {
      report.cases.push_back(
          run_case("nonnegative U" + std::to_string(r) + "," + std::to_string(m), [&](std::string& detail) {
            const IntPolynomial g = g_polynomial_uniform(r, m);
            detail = g.to_string();
            const auto& c = g.coefficients();
            return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
          }));
    }
  }
  report.cases.push_back(run_case("binomial identity m,k<=8", [](std::string& detail) {
    for (int m = 0; m <= 8; ++m) {
      for (int k = 0; k <= 8; ++k) {
        if (!binomial_identity_holds(m, k)) {
          detail = "fails at m=" + std::to_string(m) + " k=" + std::to_string(k);
          return false;
        }
      }
    }
    return true;
  }));
}

}  // namespace

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"balance", "hvector", "valuation", "pushforward", "gpoly"};
  return names;
}

SuiteReport run_suite(const std::string& suite, int max_size) {
  if (max_size < 1) throw InvalidParameters("max size must be positive");
  SuiteReport report{suite, {}};
  if (suite == "balance") {
    balance_suite(report, max_size);
  } else if (suite == "hvector") {
    hvector_suite(report, max_size);
  } else if (suite == "valuation") {
    valuation_suite(report, max_size);
  } else if (suite == "pushforward") {
    pushforward_suite(report, max_size);
  } else if (suite == "gpoly") {
    gpoly_suite(report, max_size);
  } else {
    throw InvalidParameters("unknown suite '" + suite + "'");
  }
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return report;
}

TropicalCycle csm_cycle_or_zero(const Matroid& m, int k) {
  if (k > m.rank() - 1) return TropicalCycle(m.size(), k);
  return csm_cycle(m, k);
}

bool check_pushforward(const Matroid& m, int element, int k, std::string* detail) {
  if (m.is_coloop(element)) throw InvalidParameters("pushforward identity needs a non-coloop element");
  const TropicalCycle pushed = pushforward_forget(csm_cycle(m, k), element);
  const TropicalCycle expected =
      csm_cycle_or_zero(m.deletion(element), k) - csm_cycle_or_zero(m.contraction(element), k);
  const bool ok = pushed == expected;
  if (!ok && detail) {
    *detail = "k=" + std::to_string(k) + ": pushforward " + pushed.to_string() + " vs " + expected.to_string();
  }
  return ok;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseResult& c : report.cases) {
    cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"suite", report.suite},
          {"passed", report.all_passed()},
          {"total", report.cases.size()},
          {"failures", report.failures()},
          {"cases", cases}};
}

std::string report_to_table(const SuiteReport& report) {
  std::size_t width = 4;
  for (const CaseResult& c : report.cases) width = std::max(width, c.name.size());
  std::string out;
  for (const CaseResult& c : report.cases) {
    out += (c.passed ? "PASS  " : "FAIL  ") + c.name + std::string(width - c.name.size() + 2, ' ') + c.detail + "\n";
  }
  out += report.suite + ": " + std::to_string(report.cases.size() - report.failures()) + "/" +
         std::to_string(report.cases.size()) + " passed\n";
  return out;
}

}  // namespace csm

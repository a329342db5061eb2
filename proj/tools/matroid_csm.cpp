// matroid-csm: CSM cycles of matroids, polynomial invariants, and the
// verification suites, on the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 violated mathematical precondition.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csm/bergman.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"
#include "csm/invariants.hpp"
#include "csm/polytope.hpp"
#include "csm/serialization.hpp"
#include "csm/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct MatroidInput {
  std::string spec;
  std::string bases_file;

  csm::Matroid load() const {
    if (!spec.empty() && !bases_file.empty()) throw csm::ParseError("give either --matroid or --bases-file, not both");
    if (!bases_file.empty()) return csm::load_matroid_file(bases_file);
    if (spec.empty()) throw csm::ParseError("one of --matroid or --bases-file is required");
    return csm::parse_matroid_spec(spec);
  }
};

void add_matroid_options(CLI::App* cmd, MatroidInput& input) {
  cmd->add_option("--matroid", input.spec, "uniform:r,m | graphic:Kn | fano | nonfano");
  cmd->add_option("--bases-file", input.bases_file, "JSON file {\"size\": m, \"bases\": [[...], ...]}");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

int run_csm(const MatroidInput& input, int k, const std::string& format) {
  const csm::Matroid m = input.load();
  const csm::TropicalCycle z = csm::csm_cycle(m, k);
  if (format == "table") {
    std::cout << "ambient " << z.ambient() << ", dim " << z.dim() << ", " << z.support_size() << " cones\n";
    const csm::TropicalCycle canonical = z.canonical();
    for (const auto& [chain, w] : canonical.weights()) std::cout << chain.to_string() << "\t" << w << "\n";
  } else {
    std::cout << csm::cycle_to_json(z).dump() << "\n";
  }
  return 0;
}

int run_polynomials(const MatroidInput& input, const std::string& format) {
  const csm::Matroid m = input.load();
  json out;
  out["size"] = m.size();
  out["rank"] = m.rank();
  out["charpoly"] = csm::polynomial_to_json(csm::characteristic_polynomial(m));
  const bool loopless_nonempty = !m.has_loop() && m.rank() > 0;
  out["reduced_charpoly"] =
      loopless_nonempty ? csm::polynomial_to_json(csm::reduced_characteristic_polynomial(m)) : json::array();
  out["beta"] = csm::beta(m);
  out["beta_mobius"] = csm::beta_from_mobius(m);
  if (m.size() > 0) out["beta_reduced_charpoly"] = csm::beta_from_reduced_characteristic(m);
  out["degree_poly"] = csm::polynomial_to_json(csm::csm_degree_polynomial(m));
  out["hvector_holds"] = csm::check_hvector(m);
  if (loopless_nonempty) out["euler_char_complement"] = csm::euler_char_complement(m);
  try {
    out["gpoly"] = csm::polynomial_to_json(csm::g_polynomial(m));
  } catch (const csm::UnsupportedFamily& e) {
    out["gpoly"] = nullptr;
    out["gpoly_note"] = e.what();
  }
  if (format == "table") {
    for (const auto& [key, value] : out.items()) std::cout << key << "\t" << value.dump() << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int max_size, const std::string& subdivision_file,
               const std::string& format) {
  csm::SuiteReport report = csm::run_suite(suite, max_size);
  if (!subdivision_file.empty()) {
    if (suite != "valuation") throw csm::ParseError("--subdivision-file only applies to the valuation suite");
    const csm::Subdivision sub = csm::load_subdivision_file(subdivision_file);
    csm::CaseResult c{"file " + subdivision_file, false, ""};
    const csm::SubdivisionReport v = csm::validate_subdivision(sub);
    if (!v.valid) {
      c.detail = "invalid (" + v.clause + "): " + v.message;
    } else {
      c.passed = csm::check_beta_valuation(sub);
      for (int k = 0; k < sub.parent.rank() && c.passed; ++k) {
        if (!csm::check_csm_valuation(sub, k)) {
          c.passed = false;
          c.detail = "csm_" + std::to_string(k) + " identity fails";
        }
      }
    }
    report.cases.push_back(std::move(c));
  }
  if (format == "table") {
    std::cout << csm::report_to_table(report);
  } else {
    std::cout << csm::report_to_json(report).dump() << "\n";
  }
  return report.all_passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CSM cycles of matroids as weighted tropical fans"};
  app.require_subcommand(1);

  MatroidInput input;
  std::string format = "json";
  int k = 0;
  std::string suite;
  int max_size = 7;
  std::string subdivision_file;

  CLI::App* csm_cmd = app.add_subcommand("csm", "Print the k-dimensional CSM cycle as JSON");
  add_matroid_options(csm_cmd, input);
  csm_cmd->add_option("--k", k, "Cycle dimension")->required();
  add_format_option(csm_cmd, format);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite over the catalog");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(csm::suite_names()));
  verify_cmd->add_option("--max-size", max_size, "Largest ground set to include")->check(CLI::Range(1, 7));
  verify_cmd->add_option("--subdivision-file", subdivision_file, "Extra subdivision {\"parent\", \"cells\"}");
  add_format_option(verify_cmd, format);

  CLI::App* poly_cmd = app.add_subcommand("polynomials", "Characteristic, degree and g-polynomials");
  add_matroid_options(poly_cmd, input);
  add_format_option(poly_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*csm_cmd) return run_csm(input, k, format);
    if (*verify_cmd) return run_verify(suite, max_size, subdivision_file, format);
    return run_polynomials(input, format);
  } catch (const csm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const csm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

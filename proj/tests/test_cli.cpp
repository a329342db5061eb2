#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "csm/bergman.hpp"
#include "csm/serialization.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(MATROID_CSM_BIN) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) result.out += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("csm command") {
  const RunResult r = run("csm --matroid uniform:3,4 --k 1");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(csm::cycle_from_json(doc) == csm::csm_cycle(csm::Matroid::uniform(3, 4), 1));
  CHECK(doc["entries"].size() == 4);

  const RunResult origin = run("csm --matroid uniform:2,4 --k 0");
  CHECK(nlohmann::json::parse(origin.out)["entries"] == nlohmann::json::parse(R"([{"chain":[],"weight":-2}])"));

  const std::string looped = temp_file("looped.json", R"({"size":3,"bases":[[0,1]]})");
  const RunResult empty = run("csm --bases-file " + looped + " --k 1");
  CHECK(empty.exit_code == 0);
  CHECK(nlohmann::json::parse(empty.out)["entries"].empty());

  CHECK(run("csm --matroid uniform:3,4 --k 1 --format table").exit_code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("csm --matroid bogus --k 1").exit_code == 2);
  CHECK(run("csm --k 1").exit_code == 2);
  CHECK(run("csm --matroid uniform:3,4").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify --suite nope").exit_code == 2);
  CHECK(run("csm --matroid uniform:3,4 --k 3").exit_code == 3);
  CHECK(run("csm --matroid uniform:5,4 --k 1").exit_code == 3);
  CHECK(run("csm --bases-file /nonexistent.json --k 0").exit_code == 2);
  const std::string bad = temp_file("bad.json", R"({"size":4,"bases":[[0,1],[2,3]]})");
  CHECK(run("csm --bases-file " + bad + " --k 0").exit_code == 3);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify command") {
  const RunResult r = run("verify --suite gpoly --max-size 6");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["failures"] == 0);

  const std::string good = temp_file("split.json", R"({"parent":"uniform:2,4","cells":[
      {"size":4,"bases":[[0,1],[0,2],[0,3],[1,2],[1,3]]},
      {"size":4,"bases":[[0,2],[0,3],[1,2],[1,3],[2,3]]}]})");
  CHECK(run("verify --suite valuation --max-size 4 --subdivision-file " + good).exit_code == 0);

  const std::string bad = temp_file("half.json", R"({"parent":"uniform:2,4","cells":[
      {"size":4,"bases":[[0,1],[0,2],[0,3],[1,2],[1,3]]}]})");
  const RunResult failing = run("verify --suite valuation --max-size 4 --subdivision-file " + bad);
  CHECK(failing.exit_code == 1);
  CHECK(nlohmann::json::parse(failing.out)["failures"] == 1);
}

TEST_CASE("polynomials command") {
  const RunResult r = run("polynomials --matroid uniform:3,4");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["charpoly"] == nlohmann::json::parse("[-3,6,-4,1]"));
  CHECK(doc["gpoly"] == nlohmann::json::parse("[0,1]"));
  CHECK(doc["degree_poly"] == nlohmann::json::parse("[1,-1,1]"));

  const auto fano = nlohmann::json::parse(run("polynomials --matroid fano").out);
  CHECK(fano["beta"] == 3);
  CHECK(fano["beta_mobius"] == 3);
  CHECK(fano["beta_reduced_charpoly"] == 3);

  // K4 is simple of rank 3: β = 2, deg csm_1 = -3, csm_1² = 3² - 4.
  const auto k4 = nlohmann::json::parse(run("polynomials --matroid graphic:K4").out);
  CHECK(k4["gpoly"] == nlohmann::json::parse("[0,2,2,1]"));
  CHECK(k4["hvector_holds"] == true);

  // Two disjoint triangles' worth of U_{2,3}: rank 4, neither family.
  const std::string sum = temp_file("sum.json", R"({"size":6,"bases":[
      [0,1,3,4],[0,1,3,5],[0,1,4,5],[0,2,3,4],[0,2,3,5],[0,2,4,5],[1,2,3,4],[1,2,3,5],[1,2,4,5]]})");
  const RunResult other = run("polynomials --bases-file " + sum);
  CHECK(other.exit_code == 0);
  const auto doc_other = nlohmann::json::parse(other.out);
  CHECK(doc_other["gpoly"].is_null());
  CHECK(doc_other["beta"] == 0);
}

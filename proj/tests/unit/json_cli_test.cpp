#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "zclosure/error.hpp"
#include "zclosure/json_io.hpp"
#include "zclosure/suites.hpp"

using namespace zclosure;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("polynomial JSON round trips") {
  const SymmetricPoly s(PrimeField(5), 4, {1, 0, 3, 0, 4});
  CHECK(std::get<SymmetricPoly>(polynomial_from_json(to_json(s))) == s);
  const auto m = counterexample_polynomial();
  const Json j = to_json(m);
  CHECK(j["terms"]["00011"] == 1);
  CHECK(std::get<MultilinearPoly>(polynomial_from_json(j)) == m);
  CHECK(set_from_json(5, to_json(SymmetricSet::from_weights(5, {1, 4}))) == SymmetricSet::from_weights(5, {1, 4}));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"kind":"other","p":2,"n":1})")), Error);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"kind":"multilinear","p":2,"n":2,"terms":{"1":1}})")), Error);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"kind":"symmetric","p":2,"n":2,"sigma":[1]})")), Error);
}

TEST_CASE("counterexample witness matches the golden file") {
  const auto r = run_cli({"witness", "--kind", "counterexample", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::string(ZCLOSURE_GOLDEN_DIR) + "/counterexample.json"));
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == kSchema);
  CHECK(j["verified"] == true);
}

TEST_CASE("zcl command") {
  const auto r = run_cli({"zcl", "-p", "2", "-n", "5", "-d", "2", "-E", "1,4", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "zcl");
  CHECK(j["closure"] == Json::array({1, 4}));
  CHECK(j["method"] == "bruteforce");

  const auto fast = run_cli({"zcl", "-n", "7", "-d", "1", "-E", "2,5", "--verify", "--json"});
  CHECK(fast.code == 0);
  CHECK(Json::parse(fast.out)["method"] == "main-theorem");
  CHECK(Json::parse(fast.out)["verified"] == true);

  const auto clamped = run_cli({"zcl", "-n", "3", "-d", "9", "-E", "1"});
  CHECK(clamped.code == 0);
  CHECK(clamped.err.find("warning") != std::string::npos);

  CHECK(run_cli({"zcl", "-n", "7", "-d", "1", "-E", "0", "--method", "fast"}).code == 2);
}

TEST_CASE("layer, symcl and witness commands") {
  const auto layer = run_cli({"layer", "-p", "2", "-n", "8", "-d", "1", "-i", "4", "--json"});
  CHECK(layer.code == 0);
  CHECK(Json::parse(layer.out)["closure"] == Json::array({0, 2, 4, 6, 8}));
  CHECK(Json::parse(layer.out)["method"] == "layer-formula");

  const auto sym = run_cli({"symcl", "-n", "5", "-d", "2", "-E", "1,4", "--json"});
  CHECK(Json::parse(sym.out)["closure"] == Json::array({0, 1, 4, 5}));

  const auto h = run_cli({"witness", "--kind", "h", "-p", "3", "-n", "12", "-i", "4", "--json"});
  CHECK(h.code == 0);
  CHECK(Json::parse(h.out)["verified"] == true);
  const auto r = run_cli({"witness", "--kind", "r", "-p", "3", "-n", "12", "-i", "4", "-j", "13"});
  CHECK(r.code == 2);
  CHECK(run_cli({"witness", "--kind", "r", "-p", "3", "-n", "12", "-i", "4", "-j", "12"}).code == 2);
  CHECK(run_cli({"witness", "--kind", "r", "-p", "3", "-n", "13", "-i", "4", "-j", "13"}).code == 0);

  const auto search = run_cli({"search-witness", "-n", "5", "-d", "2", "-E", "1,4", "-j", "0", "--form", "gm", "--json"});
  CHECK(search.code == 0);
  CHECK(Json::parse(search.out)["found"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"zcl", "-p", "4", "-n", "3", "-d", "1"}).code == 2);
  CHECK(run_cli({"zcl", "-n", "3", "-d", "-1"}).code == 2);
  CHECK(run_cli({"zcl", "-n", "3", "-d", "1", "-E", "7"}).code == 2);
  CHECK(run_cli({"zcl", "-n", "3", "-d", "1", "-E", "1;2"}).code == 2);
  CHECK(run_cli({"layer", "-n", "3", "-d", "1", "-i", "4"}).code == 2);
  CHECK(run_cli({"check", "nonsense"}).code == 2);

  const auto big = run_cli({"zcl", "-n", "30", "-d", "2", "-E", "1,4"});
  CHECK(big.code == 3);
  CHECK(big.err.find("size-cap-exceeded") != std::string::npos);
  CHECK(run_cli({"--cap-n", "4", "zcl", "-n", "5", "-d", "1", "-E", "2"}).code == 3);
  CHECK(run_cli({"--cap-n", "40", "zcl", "-n", "5", "-d", "1", "-E", "2"}).code == 2);
  CHECK(run_cli({"search-witness", "-n", "6", "-d", "2", "-E", "1", "-j", "0", "--form", "affine"}).code == 3);
  // The cap is restored afterwards.
  CHECK(run_cli({"zcl", "-n", "5", "-d", "1", "-E", "2"}).code == 0);
}

TEST_CASE("environment cap") {
  ::setenv("ZCLOSURE_CAP_N", "4", 1);
  const int capped = run_cli({"zcl", "-n", "5", "-d", "1", "-E", "2"}).code;
  ::setenv("ZCLOSURE_CAP_N", "99", 1);
  const int too_big = run_cli({"zcl", "-n", "5", "-d", "1", "-E", "2"}).code;
  ::unsetenv("ZCLOSURE_CAP_N");
  CHECK(capped == 3);
  CHECK(too_big == 2);
}

TEST_CASE("JSON output is reproducible byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"check", "counterexample", "--json"},
      {"check", "main-theorem", "--seed", "7", "--samples", "3", "--json"},
      {"scan", "--max-n", "6", "--json"},
      {"search-witness", "-n", "5", "-d", "2", "-E", "1,4", "-j", "0", "--form", "affine", "--json"},
  };
  for (const auto& args : commands) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  const auto seeded = Json::parse(run_cli({"check", "main-theorem", "--seed", "7", "--samples", "3", "--json"}).out);
  CHECK(seeded["seed"] == 7);
}

TEST_CASE("plain check output and the scan report") {
  const auto r = run_cli({"check", "counterexample"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gm-times-symmetric search for 0 exhausts with no witness") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto scan = Json::parse(run_cli({"scan", "--mode", "small-n", "--max-n", "5", "--json"}).out);
  bool found = false;
  for (const auto& m : scan["outside_hypothesis_mismatches"]) {
    found = found || (m["n"] == 5 && m["d"] == 2 && m["E"] == Json::array({1, 4}));
  }
  CHECK(found);
}

TEST_CASE("variable permutations") {
  const auto f = counterexample_polynomial();
  const auto g = permute_variables(f, {4, 1, 2, 3, 0});
  CHECK(equal_up_to_permutation(f, g));
  CHECK_FALSE(equal_up_to_permutation(f, f + MultilinearPoly::constant(f.field(), 5, 1)));
}

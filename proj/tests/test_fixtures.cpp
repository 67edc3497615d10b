#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chords/constructions.hpp"

using namespace chords;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(in), "missing fixture file: " << path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string kFixtureDir = CHORDS_FIXTURE_DIR;

}  // namespace

TEST_CASE("every fixture realizes its documented chord set") {
  const nlohmann::json manifest = nlohmann::json::parse(slurp(kFixtureDir + "/manifest.json"));
  REQUIRE(manifest.contains("fixtures"));
  REQUIRE(manifest["fixtures"].size() >= 10);
  for (const auto& entry : manifest["fixtures"]) {
    const std::string function_path = kFixtureDir + "/" + entry["function"].get<std::string>();
    const std::string set_path = kFixtureDir + "/" + entry["expected_set"].get<std::string>();
    const PLFunction f = parse_plfunction(slurp(function_path));
    const IntervalSet expected = interval_set_from_json(slurp(set_path));
    const VerifyResult r = verify_chordset_equals(f, expected);
    CHECK_MESSAGE(r.equal, "fixture mismatch: " << entry["function"].get<std::string>());
  }
}

TEST_CASE("the sharp-set fixtures match the generator output") {
  for (const auto& [name, n] : std::vector<std::pair<std::string, long>>{
           {"mv_half.json", 1}, {"sn2.json", 2}, {"sn3.json", 3}, {"sn5.json", 5}}) {
    const PLFunction from_file = parse_plfunction(slurp(kFixtureDir + "/" + name));
    CHECK(from_file == sn_realization(n));
  }
}

TEST_CASE("the isolated-points fixture matches the generator output") {
  const PLFunction from_file = parse_plfunction(slurp(kFixtureDir + "/isolated_points.json"));
  CHECK(from_file == isolated_chords_example());
}

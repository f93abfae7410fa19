#include "lcmlab/report_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace lcmlab;

namespace {

CampaignReport small_report(RangeMode range) {
  SweepConfig cfg;
  cfg.max_degree = 3;
  cfg.coeff_max = 2;
  cfg.n_max = 10;
  cfg.range = range;
  return run_campaign(cfg);
}

}  // namespace

TEST_CASE("campaign JSON schema") {
  const auto report = small_report(RangeMode::Half);
  const Json j = to_json(report);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"config", "checked_count", "exceptions", "duration_s", "notes"});

  CHECK(j["config"]["max_degree"] == 3);
  CHECK(j["config"]["range"] == "half");
  CHECK(j["config"]["family_filter"] == "all");
  CHECK(j["checked_count"] == report.checked_count);
  REQUIRE(j["exceptions"].size() == 7);
  const Json& six = j["exceptions"][4];
  CHECK(six["coeffs"] == Json::array({"0", "1"}));
  CHECK(six["n"] == 6);
  CHECK(six["lcm"] == "60");
  CHECK(six["threshold"] == "64");
  CHECK(six["lcm"].is_string());
}

TEST_CASE("campaign JSON round-trips byte for byte") {
  for (auto range : {RangeMode::Half, RangeMode::Full}) {
    const auto report = small_report(range);
    const std::string text = to_json(report).dump(2);
    CHECK(Json::parse(text).dump(2) == text);

    const CampaignReport back = campaign_from_json(Json::parse(text));
    CHECK(back.exceptions == report.exceptions);
    CHECK(back.checked_count == report.checked_count);
    CHECK(back.config.range == report.config.range);
    CHECK(back.duration_s == report.duration_s);
    CHECK(to_json(back).dump(2) == text);
  }
}

TEST_CASE("big lcm values survive JSON as exact decimals") {
  CampaignReport r;
  r.config.n_max = 500;
  const BigInt huge = lcm_one_to(500);
  r.exceptions.push_back({Poly{0, 1}, 500, huge, pow2(500)});
  const Json back = Json::parse(to_json(r).dump());
  CHECK(parse_decimal(back["exceptions"][0]["lcm"].get<std::string>()) == huge);
  CHECK(campaign_from_json(back).exceptions.front().threshold == pow2(500));
}

TEST_CASE("malformed campaign JSON is rejected") {
  CHECK_THROWS(campaign_from_json(Json::parse(R"({"config": {}})")));
  Json j = to_json(small_report(RangeMode::Half));
  j["exceptions"][0]["lcm"] = "12a";
  CHECK_THROWS_AS(campaign_from_json(j), std::invalid_argument);
}

TEST_CASE("campaign CSV") {
  const std::string csv = to_csv(small_report(RangeMode::Half));
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "coeffs,n,lcm,threshold");
  CHECK(lines[1] == "0;1,1,1,2");
  CHECK(lines[5] == "0;1,6,60,64");
  CHECK(lines[6] == "0;0;1,1,1,2");
  CHECK(lines[7] == "0;0;0;1,1,1,2");
}

TEST_CASE("suite CSV quotes awkward fields") {
  SuiteSummary s;
  s.name = "key2";
  s.checked = 3;
  s.failures = 1;
  s.first_counterexample = "a=1, b=\"2\"";
  CHECK(to_csv({s}) == "suite,checked,failures,first_counterexample\nkey2,3,1,\"a=1, b=\"\"2\"\"\"\n");
  CHECK(to_json(s)["passed"] == false);
}

TEST_CASE("psi JSON keeps the exact value as a string") {
  const Json j = to_json(chebyshev_psi(10));
  CHECK(j["lcm"] == "2520");
  CHECK(j["bit_length"] == 12);
}

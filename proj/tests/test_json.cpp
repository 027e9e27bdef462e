#include <doctest.h>

#include "oracles.hpp"
#include "permstat/report_json.hpp"

using namespace permstat;
using nlohmann::json;

namespace {

Permutation P(const char *text) { return Permutation::parse(text); }

void require_report_schema(const json &j) {
  REQUIRE(j.at("w").is_string());
  REQUIRE(j.at("rep").is_number_integer());
  REQUIRE(j.at("patt").is_number_integer());
  REQUIRE(j.at("repeat").is_array());
  REQUIRE(j.at("xi").is_array());
  for (const auto &entry : j.at("xi")) {
    REQUIRE(entry.at("k").is_number_integer());
    const auto c = entry.at("case").get<std::string>();
    REQUIRE((c == "I" || c == "II" || c == "III"));
    REQUIRE(entry.at("values").is_array());
  }
  REQUIRE(j.at("avoids_phi").is_boolean());
  const auto verdict = j.at("verdict").get<std::string>();
  REQUIRE((verdict == "equal" || verdict == "strict"));
  REQUIRE(j.at("ok").is_boolean());
}

} // namespace

TEST_CASE("occurrence record") {
  const auto occ = occurrences(P("35412"), pattern_3412()).front();
  const json j = occ;
  CHECK(j == json::parse(R"({"pattern":"3412","positions":[1,2,4,5],"values":[3,5,1,2],"top":5})"));
}

TEST_CASE("occurrence records rebuild the occurrence, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto &v : oracle::all_perms(n)) {
      const Permutation w(v);
      for (const auto &occ : occurrences(w, pattern_321())) {
        const json j = json::parse(json(occ).dump());
        const auto rebuilt = make_occurrence(
            w, Pattern::parse(j.at("pattern").get<std::string>()),
            j.at("positions").get<std::vector<int>>());
        REQUIRE(rebuilt == occ);
        REQUIRE(j.at("values").get<std::vector<int>>() == occ.values);
        REQUIRE(j.at("top").get<int>() == occ.top);
      }
    }
  }
}

TEST_CASE("level reports follow the shared schema, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto &v : oracle::all_perms(n)) {
      const Permutation w(v);
      const json level = verify_level(w);
      require_report_schema(json::parse(level.dump()));
      REQUIRE(Permutation::parse(level.at("w").get<std::string>()) == w);
    }
  }
}

TEST_CASE("level report for 35412") {
  const json j = verify_level(P("35412"));
  CHECK(j.at("rep") == 3);
  CHECK(j.at("patt") == 4);
  CHECK(j.at("repeat") == json::array({2, 3}));
  CHECK(j.at("xi")[0].at("values") == json::array({5, 4, 1}));
  CHECK(j.at("xi")[0].at("case") == "I");
  CHECK(j.at("verdict") == "strict");
  CHECK(j.at("avoids_phi") == false);
  CHECK(j.at("ok") == true);
}

TEST_CASE("theorem, bound and bijection reports") {
  const json t = verify_main(P("45213"));
  CHECK(t.at("rep") == 3);
  CHECK(t.at("patt") == 4);
  CHECK(t.at("verdict") == "strict");

  const json b = verify_bound(P("54321"));
  CHECK(b.at("phi_tops") == json::array({4, 5}));

  const json g = verify_global_bijection(P("3412"));
  CHECK(g.at("images").size() == 1);
  CHECK(g.at("images")[0].at("occurrence").at("values") == json::array({3, 4, 1, 2}));
  CHECK(g.at("ok") == true);
}

TEST_CASE("campaign json") {
  const auto report = run_campaign(4, 2);
  const auto j = campaign_json(report, false);
  CHECK(j.at("checked") == 24);
  CHECK(j.at("avoider_count") == 23);
  CHECK(j.at("failures").empty());
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(campaign_json(report).contains("wall_time"));
}

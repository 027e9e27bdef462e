#include "permstat/report_json.hpp"

namespace permstat {

using nlohmann::json;

void to_json(json &j, const Occurrence &occ) {
  j = json{{"pattern", occ.pattern.name()},
           {"positions", occ.positions},
           {"values", occ.values},
           {"top", occ.top}};
}

void to_json(json &j, const XiEntry &entry) {
  j = json{{"k", entry.k},
           {"case", std::string(to_string(entry.assigned.case_tag))},
           {"pattern", entry.image.pattern.name()},
           {"values", entry.image.values},
           {"plus", entry.uses_plus}};
}

void to_json(json &j, const Assignment &assignment) {
  json pm = json::array();
  for (const auto &[k, pair] : assignment.plus_minus) {
    pm.push_back({{"k", k}, {"plus", pair.plus.values}, {"minus", pair.minus.values}});
  }
  j = json{{"repeat", assignment.repeat.indices},
           {"parts", assignment.parts},
           {"xi", assignment.xi},
           {"plus_minus", pm}};
}

void to_json(json &j, const LevelReport &report) {
  j = json{{"w", report.w.to_string()},
           {"rep", report.rep},
           {"patt", report.patt},
           {"repeat", report.assignment.repeat.indices},
           {"xi", report.assignment.xi},
           {"avoids_phi", report.avoids_phi},
           {"verdict", std::string(to_string(report.verdict))},
           {"ok", report.ok},
           {"level", report.w.size()},
           {"repeat_count", report.repeat_count},
           {"patt_top", report.patt_top},
           {"has_phi_top", report.has_phi_top},
           {"parts", report.assignment.parts},
           {"checks",
            {{"new_repeats", report.new_repeats_ok},
             {"images_valid", report.images_valid},
             {"injective", report.injective},
             {"bijective", report.bijective},
             {"collisions", report.collisions_ok},
             {"witnesses", report.witnesses_ok}}}};
}

void to_json(json &j, const TheoremReport &report) {
  j = json{{"w", report.w.to_string()},
           {"rep", report.rep},
           {"patt", report.patt},
           {"avoids_phi", report.avoids_phi},
           {"verdict", std::string(to_string(report.verdict))},
           {"zero_one_ok", report.zero_one_ok},
           {"ok", report.ok}};
}

void to_json(json &j, const BijectionReport &report) {
  json images = json::array();
  for (const auto &img : report.images) {
    images.push_back({{"stage", img.stage},
                      {"level", img.level},
                      {"k", img.k},
                      {"occurrence", img.occurrence}});
  }
  j = json{{"w", report.w.to_string()},
           {"images", images},
           {"occurrence_count", report.occurrence_count},
           {"distinct", report.distinct},
           {"covers", report.covers},
           {"avoids_phi", true},
           {"ok", report.ok}};
}

void to_json(json &j, const BoundReport &report) {
  j = json{{"w", report.w.to_string()},
           {"rep", report.rep},
           {"patt", report.patt},
           {"phi_tops", report.phi_tops},
           {"ok", report.ok}};
}

json campaign_json(const CampaignReport &report, bool include_wall_time) {
  json failures = json::array();
  for (const auto &f : report.failures) {
    failures.push_back({{"w", f.w}, {"diagnostic", json::parse(f.diagnostic)}});
  }
  json j{{"n", report.n},
         {"from", report.from},
         {"to", report.to},
         {"checked", report.checked},
         {"failures", failures},
         {"avoider_count", report.avoider_count},
         {"equal_count", report.equal_count},
         {"strict_count", report.strict_count},
         {"ok", report.failures.empty()}};
  if (include_wall_time) {
    j["wall_time"] = report.wall_time.count();
  }
  return j;
}

} // namespace permstat

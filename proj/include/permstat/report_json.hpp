#ifndef PERMSTAT_REPORT_JSON_HPP
#define PERMSTAT_REPORT_JSON_HPP

#include <json.hpp>

#include "permstat/bijection.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/pattern.hpp"

// nlohmann::json converters, found by ADL.
//
// Reports share one schema:
//   {"w": "...", "rep": r, "patt": p, "repeat": [...],
//    "xi": [{"k":, "case":, "values": [...]}], "avoids_phi": bool,
//    "verdict": "equal"|"strict", "ok": bool}
// with report-specific extras alongside.

namespace permstat {

void to_json(nlohmann::json &j, const Occurrence &occ);
void to_json(nlohmann::json &j, const XiEntry &entry);
void to_json(nlohmann::json &j, const Assignment &assignment);
void to_json(nlohmann::json &j, const LevelReport &report);
void to_json(nlohmann::json &j, const TheoremReport &report);
void to_json(nlohmann::json &j, const BijectionReport &report);
void to_json(nlohmann::json &j, const BoundReport &report);

/// wall_time is omitted unless include_wall_time.
nlohmann::json campaign_json(const CampaignReport &report, bool include_wall_time = true);

} // namespace permstat

#endif

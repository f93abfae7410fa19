#pragma once

#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lcmlab {

using Json = nlohmann::ordered_json;

// Campaign JSON schema, in this key order:
//   { "config": {max_degree, coeff_max, n_max, family_filter, range},
//     "checked_count": int,
//     "exceptions": [ {"coeffs": ["0","1"], "n": int, "lcm": "60", "threshold": "64"} ],
//     "duration_s": float,
//     "notes": [string] }
// Big integers are decimal strings; coeffs are constant term first.
Json to_json(const CampaignReport& report);
Json to_json(const SweepConfig& cfg);
Json to_json(const SuiteSummary& summary);
Json to_json(const PsiValue& psi);

/// Inverse of to_json(CampaignReport). Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
CampaignReport campaign_from_json(const Json& j);

/// Header "coeffs,n,lcm,threshold", one row per exception. coeffs is
/// the constant-term-first list joined with ';'.
std::string to_csv(const CampaignReport& report);
std::string to_csv(const std::vector<SuiteSummary>& summaries);

}  // namespace lcmlab

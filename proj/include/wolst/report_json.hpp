#pragma once

#include <json.hpp>

#include "wolst/wolstenholme.hpp"

namespace wolst {

// Schema v1: {"v":1, "prime":N, "overall":bool,
//             "checks":[{"name","claim","left","right","passed"}]}
// All big values travel as decimal strings inside left/right.
nlohmann::json report_to_json(const VerificationReport& report);

// Strict inverse of report_to_json; rejects unknown check names, a missing
// or wrong schema version, and an "overall" flag that contradicts the
// per-check verdicts.
VerificationReport report_from_json(const nlohmann::json& j);

} // namespace wolst

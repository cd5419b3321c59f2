#pragma once

#include <span>
#include <string>

#include "fairscore/measures.hpp"

namespace fairscore {

// Report serialization. The JSON schema is stable:
//   { per_group_stats, fusion_weights,
//     indices.{sfi,cfi,dfi}.{normal,extremal,weighted}.{raw,clamped},
//     config, warnings }
// JSON and CSV carry full precision; the text view headlines values at
// 4 decimals.

std::string report_to_json(const FairnessReport& report);

/// index,variant,raw,clamped -- nine rows in fixed order.
std::string report_to_csv(const FairnessReport& report);

std::string report_to_text(const FairnessReport& report);

/// group,bin_index,bin_lower,bin_upper,mass -- every bin of every group.
std::string histogram_csv(std::span<const GroupStats> stats);

}  // namespace fairscore

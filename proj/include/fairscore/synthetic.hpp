#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fairscore/types.hpp"

namespace fairscore {

/// Truncated-normal parameters of one group's genuine and imposter scores.
/// Values falling outside [0,1] are clipped to the bound, so sample counts
/// are exact and generation is deterministic.
struct GroupDistributionSpec {
    double mu_genuine = 0.0;
    double sigma_genuine = 0.0;
    double mu_imposter = 0.0;
    double sigma_imposter = 0.0;
    std::size_t n_genuine = 0;
    std::size_t n_imposter = 0;
};

enum class Scenario { Fair, Unfair, HighlyUnfair };
enum class SizeProfile { Balanced, Imbalanced };

struct ScenarioPreset {
    std::string name;
    SizeProfile profile = SizeProfile::Balanced;
    std::vector<std::string> labels;
    std::vector<GroupDistributionSpec> groups;
};

/// Throws ValidationError on anything but fair | unfair | highly_unfair.
Scenario scenario_from_name(const std::string& name);

/// Three-group presets. All groups share one well-separated score model in
/// the fair scenario; the unfair ones degrade the separation and inflate
/// the spread of group d3. Balanced puts 1000 genuine + 1000 imposter
/// scores in every group; imbalanced scales the groups as 100/1000/2000.
ScenarioPreset make_preset(Scenario scenario, SizeProfile profile = SizeProfile::Balanced);

/// Deterministic for a fixed seed, on any platform: draws come from
/// mt19937_64 through an explicit Box-Muller transform rather than
/// std::normal_distribution, whose algorithm varies between standard
/// libraries.
std::vector<ScoreRecord> generate_records(const ScenarioPreset& preset, std::uint64_t seed);

Dataset generate(const ScenarioPreset& preset, std::uint64_t seed);

/// Writes the labeled-score CSV consumed by parse_labeled_scores. Scores
/// are printed in shortest round-trip form, so parsing the file recovers
/// them bit-exactly.
void write_labeled_csv(std::ostream& out, std::span<const ScoreRecord> records);

}  // namespace fairscore

#include "fairscore/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>

#include "fairscore/format.hpp"

namespace fairscore {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double uniform_open01(std::mt19937_64& rng) {
    // (0, 1]: 53 significant bits, never zero, so log() below is safe.
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double uniform_halfopen01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller (cosine branch). std::normal_distribution is not used on
// purpose: its algorithm is implementation-defined, and generated datasets
// must reproduce bit-for-bit from a seed across standard libraries.
double standard_normal(std::mt19937_64& rng) {
    const double u1 = uniform_open01(rng);
    const double u2 = uniform_halfopen01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double truncated_normal(std::mt19937_64& rng, double mu, double sigma) {
    return std::clamp(mu + sigma * standard_normal(rng), 0.0, 1.0);
}

struct ScoreModel {
    double mu_genuine, sigma_genuine, mu_imposter, sigma_imposter;
};

// d1 and d2 always share the well-separated reference model; the unfair
// scenarios degrade d3's separation and inflate its spread.
constexpr ScoreModel kReference{0.80, 0.05, 0.25, 0.05};
constexpr ScoreModel kDegraded{0.70, 0.09, 0.35, 0.09};
constexpr ScoreModel kCollapsed{0.55, 0.12, 0.45, 0.12};

}  // namespace

Scenario scenario_from_name(const std::string& name) {
    if (name == "fair") return Scenario::Fair;
    if (name == "unfair") return Scenario::Unfair;
    if (name == "highly_unfair") return Scenario::HighlyUnfair;
    throw ValidationError("unknown scenario '" + name +
                          "' (expected fair, unfair, or highly_unfair)");
}

ScenarioPreset make_preset(Scenario scenario, SizeProfile profile) {
    ScenarioPreset preset;
    preset.profile = profile;
    preset.labels = {"d1", "d2", "d3"};

    ScoreModel third = kReference;
    switch (scenario) {
        case Scenario::Fair:
            preset.name = "fair";
            break;
        case Scenario::Unfair:
            preset.name = "unfair";
            third = kDegraded;
            break;
        case Scenario::HighlyUnfair:
            preset.name = "highly_unfair";
            third = kCollapsed;
            break;
    }
    const std::array<ScoreModel, 3> models{kReference, kReference, third};
    const std::array<std::size_t, 3> sizes = profile == SizeProfile::Balanced
                                                 ? std::array<std::size_t, 3>{1000, 1000, 1000}
                                                 : std::array<std::size_t, 3>{100, 1000, 2000};

    preset.groups.reserve(3);
    for (std::size_t i = 0; i < 3; ++i) {
        GroupDistributionSpec spec;
        spec.mu_genuine = models[i].mu_genuine;
        spec.sigma_genuine = models[i].sigma_genuine;
        spec.mu_imposter = models[i].mu_imposter;
        spec.sigma_imposter = models[i].sigma_imposter;
        spec.n_genuine = sizes[i];
        spec.n_imposter = sizes[i];
        preset.groups.push_back(spec);
    }
    return preset;
}

std::vector<ScoreRecord> generate_records(const ScenarioPreset& preset, std::uint64_t seed) {
    if (preset.groups.size() < 2 || preset.groups.size() != preset.labels.size()) {
        throw ValidationError("preset needs >= 2 groups with one label each");
    }
    for (const auto& g : preset.groups) {
        if (g.n_genuine < 2 || g.n_imposter < 2) {
            throw ValidationError("preset group sizes must be at least 2");
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<ScoreRecord> records;
    std::size_t total = 0;
    for (const auto& g : preset.groups) total += g.n_genuine + g.n_imposter;
    records.reserve(total);

    for (std::size_t i = 0; i < preset.groups.size(); ++i) {
        const auto& g = preset.groups[i];
        const auto& label = preset.labels[i];
        for (std::size_t n = 0; n < g.n_genuine; ++n) {
            records.push_back(
                {label, Kind::Genuine, truncated_normal(rng, g.mu_genuine, g.sigma_genuine)});
        }
        for (std::size_t n = 0; n < g.n_imposter; ++n) {
            records.push_back(
                {label, Kind::Imposter, truncated_normal(rng, g.mu_imposter, g.sigma_imposter)});
        }
    }
    return records;
}

Dataset generate(const ScenarioPreset& preset, std::uint64_t seed) {
    const auto records = generate_records(preset, seed);
    return validate_dataset(records);
}

void write_labeled_csv(std::ostream& out, std::span<const ScoreRecord> records) {
    out << "demographic,kind,score\n";
    for (const auto& r : records) {
        out << r.demographic << ',' << (r.kind == Kind::Genuine ? "genuine" : "imposter") << ','
            << double_repr(r.score) << '\n';
    }
}

}  // namespace fairscore

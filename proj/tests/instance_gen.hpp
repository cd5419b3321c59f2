#pragma once

// Randomized test instances shared by the unit and acceptance suites.

#include <cstddef>
#include <random>
#include <vector>

#include "fairscore/stats.hpp"
#include "naive_oracle.hpp"

namespace testgen {

/// Random per-group moments, full-support histograms, and sizes. Sizes stay
/// in [100, 1000] so every raw fusion weight is strictly above 1 in double
/// precision (the exponential bump underflows only for extreme ratios).
inline naive::Instance random_instance(std::mt19937_64& rng, std::size_t groups,
                                       std::size_t bins = 32) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> spread(0.0, 0.25);
    std::uniform_real_distribution<double> mass(0.01, 1.0);
    std::uniform_int_distribution<std::size_t> size(100, 1000);

    naive::Instance in;
    for (std::size_t g = 0; g < groups; ++g) {
        in.mu_genuine.push_back(unit(rng));
        in.mu_imposter.push_back(unit(rng));
        in.sigma_genuine.push_back(spread(rng));
        in.sigma_imposter.push_back(spread(rng));
        in.sizes.push_back(size(rng));

        std::vector<double> h(bins);
        double total = 0.0;
        for (auto& b : h) {
            b = mass(rng);
            total += b;
        }
        for (auto& b : h) b /= total;
        in.histograms.push_back(std::move(h));
    }
    return in;
}

/// The same instance as library GroupStats (sizes are carried separately).
inline std::vector<fairscore::GroupStats> to_group_stats(const naive::Instance& in) {
    std::vector<fairscore::GroupStats> stats;
    for (std::size_t g = 0; g < in.sizes.size(); ++g) {
        fairscore::GroupStats s;
        s.demographic = "g" + std::to_string(g + 1);
        s.mu_genuine = in.mu_genuine[g];
        s.mu_imposter = in.mu_imposter[g];
        s.sigma_genuine = in.sigma_genuine[g];
        s.sigma_imposter = in.sigma_imposter[g];
        s.histogram.bins = in.histograms[g];
        s.n_genuine = in.sizes[g] / 2;
        s.n_imposter = in.sizes[g] - in.sizes[g] / 2;
        stats.push_back(std::move(s));
    }
    return stats;
}

}  // namespace testgen

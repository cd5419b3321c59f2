#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fairscore/types.hpp"

namespace fairscore {

inline constexpr std::size_t kDefaultBins = 100;

/// Probability mass over uniform bins spanning [0,1]; entries sum to 1.
struct Histogram {
    std::vector<double> bins;

    std::size_t size() const noexcept { return bins.size(); }
};

/// Bins a non-empty score set into a unit-sum histogram over [0,1].
Histogram make_histogram(std::span<const double> scores, std::size_t bins = kDefaultBins);

/// Per-group summary: moments of the genuine and imposter score sets plus
/// the combined (genuine + imposter) unit-sum histogram. Standard
/// deviations are population (1/n), not sample.
struct GroupStats {
    std::string demographic;
    double mu_genuine = 0.0;
    double mu_imposter = 0.0;
    double sigma_genuine = 0.0;
    double sigma_imposter = 0.0;
    Histogram histogram;
    std::size_t n_genuine = 0;
    std::size_t n_imposter = 0;

    std::size_t record_count() const noexcept { return n_genuine + n_imposter; }
};

/// Requires >= 2 genuine and >= 2 imposter scores, all in [0,1].
GroupStats group_stats(const GroupScores& group, std::size_t bins = kDefaultBins);

/// D_KL(a || b) in bits. a(x) = 0 terms contribute nothing; a(x) > 0 where
/// b(x) = 0 throws ValidationError (the divergence is undefined there).
/// No smoothing is applied: the fairness pipeline only evaluates KL against
/// mean distributions, whose support covers every component by construction.
double kl_divergence(const Histogram& a, const Histogram& b);

/// Elementwise arithmetic mean of >= 2 equally sized histograms.
Histogram mean_histogram(std::span<const Histogram> histograms);

}  // namespace fairscore

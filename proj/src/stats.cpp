#include "fairscore/stats.hpp"

#include <cmath>
#include <string>

#include "fairscore/kernels.hpp"

namespace fairscore {

Histogram make_histogram(std::span<const double> scores, std::size_t bins) {
    if (bins < 2) {
        throw ValidationError("histogram needs at least 2 bins, got " + std::to_string(bins));
    }
    if (scores.empty()) {
        throw ValidationError("cannot build a histogram from an empty score set");
    }
    const auto counts = kernels::bin_counts(scores, bins);
    Histogram h;
    h.bins.resize(bins);
    const double total = static_cast<double>(scores.size());
    for (std::size_t b = 0; b < bins; ++b) {
        h.bins[b] = static_cast<double>(counts[b]) / total;
    }
    return h;
}

GroupStats group_stats(const GroupScores& group, std::size_t bins) {
    if (group.genuine.size() < 2 || group.imposter.size() < 2) {
        throw ValidationError("demographic '" + group.demographic +
                              "' needs at least 2 genuine and 2 imposter scores");
    }
    GroupStats s;
    s.demographic = group.demographic;
    s.n_genuine = group.genuine.size();
    s.n_imposter = group.imposter.size();
    s.mu_genuine = kernels::mean(group.genuine);
    s.mu_imposter = kernels::mean(group.imposter);
    s.sigma_genuine = std::sqrt(kernels::variance(group.genuine, s.mu_genuine));
    s.sigma_imposter = std::sqrt(kernels::variance(group.imposter, s.mu_imposter));

    // Combined histogram: counts of both score sets pooled, then normalized.
    auto counts = kernels::bin_counts(group.genuine, bins);
    const auto imposter_counts = kernels::bin_counts(group.imposter, bins);
    for (std::size_t b = 0; b < bins; ++b) counts[b] += imposter_counts[b];
    s.histogram.bins.resize(bins);
    const double total = static_cast<double>(s.record_count());
    for (std::size_t b = 0; b < bins; ++b) {
        s.histogram.bins[b] = static_cast<double>(counts[b]) / total;
    }
    return s;
}

double kl_divergence(const Histogram& a, const Histogram& b) {
    if (a.size() != b.size()) {
        throw ValidationError("KL divergence needs equal bin counts (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double p = a.bins[i];
        if (p <= 0.0) continue;
        const double q = b.bins[i];
        if (q <= 0.0) {
            throw ValidationError("KL divergence undefined: bin " + std::to_string(i) +
                                  " has mass in the first histogram but none in the second");
        }
        acc += p * std::log2(p / q);
    }
    // Nonnegative by Gibbs' inequality; roundoff can leave a tiny negative.
    return acc < 0.0 ? 0.0 : acc;
}

Histogram mean_histogram(std::span<const Histogram> histograms) {
    if (histograms.size() < 2) {
        throw ValidationError("mean histogram needs at least 2 histograms");
    }
    const std::size_t bins = histograms.front().size();
    for (const auto& h : histograms) {
        if (h.size() != bins) {
            throw ValidationError("mean histogram needs equal bin counts (" +
                                  std::to_string(bins) + " vs " + std::to_string(h.size()) + ")");
        }
    }
    Histogram mean;
    mean.bins.assign(bins, 0.0);
    for (const auto& h : histograms) {
        for (std::size_t b = 0; b < bins; ++b) mean.bins[b] += h.bins[b];
    }
    const double k = static_cast<double>(histograms.size());
    for (auto& m : mean.bins) m /= k;
    return mean;
}

}  // namespace fairscore

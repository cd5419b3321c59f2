#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fairscore::kernels {

// OpenMP-parallel reductions over score arrays. Per-thread partials are
// combined in thread-index order, so results are reproducible from run to
// run for a fixed thread count. kernels::serial holds the plain-loop
// reference implementations used by the tests and the benchmark target.

double sum(std::span<const double> xs);

/// Arithmetic mean; 0 for an empty span.
double mean(std::span<const double> xs);

/// Population (1/n) variance around a precomputed mean.
double variance(std::span<const double> xs, double mean);

/// Bin occupancy for scores in [0,1]: bin i covers [i/B, (i+1)/B), the
/// last bin also includes 1.0.
std::vector<std::uint64_t> bin_counts(std::span<const double> xs, std::size_t bins);

/// (min, max) of a non-empty span.
std::pair<double, double> min_max(std::span<const double> xs);

/// Bin index of one score under the rule above.
inline std::size_t bin_index(double x, std::size_t bins) noexcept {
    if (x <= 0.0) return 0;
    const auto idx = static_cast<std::size_t>(x * static_cast<double>(bins));
    return idx >= bins ? bins - 1 : idx;
}

namespace serial {
double sum(std::span<const double> xs);
double mean(std::span<const double> xs);
double variance(std::span<const double> xs, double mean);
std::vector<std::uint64_t> bin_counts(std::span<const double> xs, std::size_t bins);
std::pair<double, double> min_max(std::span<const double> xs);
}  // namespace serial

}  // namespace fairscore::kernels

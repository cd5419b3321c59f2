#include "fairscore/kernels.hpp"

#include <limits>

namespace fairscore::kernels::serial {

double sum(std::span<const double> xs) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
}

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    return sum(xs) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs, double mean) {
    if (xs.empty()) return 0.0;
    double acc = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(xs.size());
}

std::vector<std::uint64_t> bin_counts(std::span<const double> xs, std::size_t bins) {
    std::vector<std::uint64_t> counts(bins, 0);
    for (double x : xs) ++counts[bin_index(x, bins)];
    return counts;
}

std::pair<double, double> min_max(std::span<const double> xs) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return {lo, hi};
}

}  // namespace fairscore::kernels::serial

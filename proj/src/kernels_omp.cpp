#include "fairscore/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>
#include <vector>

namespace fairscore::kernels {

namespace {

// Below this size the fork/join overhead outweighs the loop itself.
constexpr std::size_t kParallelCutoff = std::size_t{1} << 14;

}  // namespace

double sum(std::span<const double> xs) {
    if (xs.size() < kParallelCutoff) return serial::sum(xs);
    const auto n = static_cast<std::int64_t>(xs.size());
    std::vector<double> partial(static_cast<std::size_t>(omp_get_max_threads()), 0.0);
#pragma omp parallel
    {
        double acc = 0.0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            acc += xs[static_cast<std::size_t>(i)];
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = acc;
    }
    // Combining in thread order keeps the result reproducible run to run.
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    return sum(xs) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs, double mean) {
    if (xs.empty()) return 0.0;
    if (xs.size() < kParallelCutoff) return serial::variance(xs, mean);
    const auto n = static_cast<std::int64_t>(xs.size());
    std::vector<double> partial(static_cast<std::size_t>(omp_get_max_threads()), 0.0);
#pragma omp parallel
    {
        double acc = 0.0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const double d = xs[static_cast<std::size_t>(i)] - mean;
            acc += d * d;
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total / static_cast<double>(xs.size());
}

std::vector<std::uint64_t> bin_counts(std::span<const double> xs, std::size_t bins) {
    if (xs.size() < kParallelCutoff) return serial::bin_counts(xs, bins);
    const auto n = static_cast<std::int64_t>(xs.size());
    const auto threads = static_cast<std::size_t>(omp_get_max_threads());
    std::vector<std::vector<std::uint64_t>> local(threads,
                                                  std::vector<std::uint64_t>(bins, 0));
#pragma omp parallel
    {
        auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            ++mine[bin_index(xs[static_cast<std::size_t>(i)], bins)];
        }
    }
    std::vector<std::uint64_t> counts(bins, 0);
    for (const auto& l : local) {
        for (std::size_t b = 0; b < bins; ++b) counts[b] += l[b];
    }
    return counts;
}

std::pair<double, double> min_max(std::span<const double> xs) {
    if (xs.size() < kParallelCutoff) return serial::min_max(xs);
    const auto n = static_cast<std::int64_t>(xs.size());
    const auto threads = static_cast<std::size_t>(omp_get_max_threads());
    std::vector<double> lo(threads, std::numeric_limits<double>::infinity());
    std::vector<double> hi(threads, -std::numeric_limits<double>::infinity());
#pragma omp parallel
    {
        const auto t = static_cast<std::size_t>(omp_get_thread_num());
        double mylo = std::numeric_limits<double>::infinity();
        double myhi = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const double x = xs[static_cast<std::size_t>(i)];
            if (x < mylo) mylo = x;
            if (x > myhi) myhi = x;
        }
        lo[t] = mylo;
        hi[t] = myhi;
    }
    double outlo = std::numeric_limits<double>::infinity();
    double outhi = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < threads; ++t) {
        if (lo[t] < outlo) outlo = lo[t];
        if (hi[t] > outhi) outhi = hi[t];
    }
    return {outlo, outhi};
}

}  // namespace fairscore::kernels

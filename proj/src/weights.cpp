#include "fairscore/weights.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fairscore/types.hpp"

namespace fairscore {

namespace {

double default_sigma(std::size_t group_count) {
    return 1.0 / (2.0 * static_cast<double>(group_count));
}

void check_group_count(std::size_t group_count) {
    if (group_count < 2) {
        throw ValidationError("fusion weights need at least 2 groups, got " +
                              std::to_string(group_count));
    }
}

}  // namespace

std::vector<double> FusionWeights::normalized() const {
    std::vector<double> w;
    w.reserve(per_group.size());
    for (const auto& g : per_group) w.push_back(g.normalized);
    return w;
}

double raw_fusion_weight(double ratio, std::size_t group_count, const WeightParams& params) {
    check_group_count(group_count);
    const double sigma = params.sigma.value_or(default_sigma(group_count));
    if (!(sigma > 0.0)) {
        throw ValidationError("weighing sigma must be positive");
    }
    const double center = 1.0 / (2.0 * static_cast<double>(group_count));
    const double d = ratio - center;
    return params.stability + std::exp(-(d * d) / (2.0 * sigma * sigma));
}

FusionWeights compute_fusion_weights(std::span<const std::size_t> sizes,
                                     std::span<const std::string> labels,
                                     const WeightParams& params) {
    const std::size_t k = sizes.size();
    check_group_count(k);
    if (!labels.empty() && labels.size() != k) {
        throw ValidationError("label count does not match group count");
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (sizes[i] == 0) {
            throw ValidationError("group sizes must be positive (group " +
                                  std::to_string(i + 1) + " is empty)");
        }
        total += sizes[i];
    }

    FusionWeights out;
    out.group_count = k;
    out.total_size = total;
    out.stability = params.stability;
    out.sigma = params.sigma.value_or(default_sigma(k));
    out.standard = params.stability == 1.0 &&
                   (!params.sigma || *params.sigma == default_sigma(k));

    out.per_group.resize(k);
    double raw_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double ratio = static_cast<double>(sizes[i]) / static_cast<double>(total);
        out.per_group[i].raw = raw_fusion_weight(ratio, k, params);
        out.per_group[i].label = labels.empty() ? "g" + std::to_string(i + 1) : labels[i];
        raw_sum += out.per_group[i].raw;
    }
    for (auto& g : out.per_group) g.normalized = g.raw / raw_sum;
    return out;
}

std::vector<std::pair<double, double>> weight_curve(std::size_t group_count,
                                                    std::size_t resolution,
                                                    const WeightParams& params) {
    check_group_count(group_count);
    if (resolution < 2) {
        throw ValidationError("curve resolution must be at least 2");
    }
    std::vector<std::pair<double, double>> curve;
    curve.reserve(resolution);
    for (std::size_t j = 1; j <= resolution; ++j) {
        const double ratio = static_cast<double>(j) / static_cast<double>(resolution);
        curve.emplace_back(ratio, raw_fusion_weight(ratio, group_count, params));
    }
    return curve;
}

}  // namespace fairscore

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fairscore {

/// Parameters of the size-based weighing function
///
///   w_raw(r) = c + exp(-(r - 1/(2K))^2 / (2 sigma^2)),   r = N_i / N
///
/// with the standard setting c = 1 and sigma = 1/(2K). The bump peaks at
/// ratio 1/(2K) -- half the balanced proportion, not 1/K -- so mildly
/// under-represented groups get the largest raw weight while vanishing
/// groups fall back towards c. Overriding either parameter marks the
/// resulting weights (and any report built from them) as non-standard.
struct WeightParams {
    double stability = 1.0;       // additive constant c
    std::optional<double> sigma;  // bump width; defaults to 1/(2K)
};

struct GroupWeight {
    std::string label;
    double raw = 0.0;         // in (c, c+1]
    double normalized = 0.0;  // raw / sum of raws
};

struct FusionWeights {
    std::vector<GroupWeight> per_group;
    double stability = 1.0;
    double sigma = 0.0;
    std::size_t group_count = 0;
    std::size_t total_size = 0;
    bool standard = true;

    std::vector<double> normalized() const;
};

/// Raw (unnormalized) weight of one group as a function of its size ratio.
double raw_fusion_weight(double ratio, std::size_t group_count,
                         const WeightParams& params = {});

/// Weights for K >= 2 positive group sizes. Labels are optional; when
/// omitted the groups are named g1..gK.
FusionWeights compute_fusion_weights(std::span<const std::size_t> sizes,
                                     std::span<const std::string> labels = {},
                                     const WeightParams& params = {});

/// Samples the raw weight at ratios j/resolution, j = 1..resolution, for
/// plotting the weighing curve.
std::vector<std::pair<double, double>> weight_curve(std::size_t group_count,
                                                    std::size_t resolution,
                                                    const WeightParams& params = {});

}  // namespace fairscore

#include "fairscore/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairscore/format.hpp"

namespace fairscore {

namespace {

void check_group_count(std::size_t k) {
    if (k < 2) {
        throw ValidationError("fairness indices need at least 2 groups, got " +
                              std::to_string(k));
    }
}

double abs_dev_sum(std::span<const double> z, double center) {
    double acc = 0.0;
    for (double v : z) acc += std::abs(v - center);
    return acc;
}

double abs_dev_max(std::span<const double> z, double center) {
    double mx = 0.0;
    for (double v : z) mx = std::max(mx, std::abs(v - center));
    return mx;
}

double abs_dev_weighted(std::span<const double> z, double center,
                        const FusionWeights& weights) {
    if (weights.per_group.size() != z.size()) {
        throw ValidationError("weight count does not match group count");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        acc += weights.per_group[i].normalized * std::abs(z[i] - center);
    }
    return acc;
}

double unweighted_mean(std::span<const double> z) {
    double acc = 0.0;
    for (double v : z) acc += v;
    return acc / static_cast<double>(z.size());
}

}  // namespace

SeparationVector separation_vector(std::span<const GroupStats> stats) {
    check_group_count(stats.size());
    SeparationVector sv;
    sv.per_group.reserve(stats.size());
    for (const auto& s : stats) {
        sv.per_group.push_back(std::abs(s.mu_genuine - s.mu_imposter));
    }
    sv.mean = unweighted_mean(sv.per_group);
    return sv;
}

CompactnessVector compactness_vector(std::span<const GroupStats> stats) {
    check_group_count(stats.size());
    CompactnessVector cv;
    cv.per_group.reserve(stats.size());
    for (const auto& s : stats) {
        cv.per_group.push_back(s.sigma_genuine + s.sigma_imposter);
    }
    cv.mean = unweighted_mean(cv.per_group);
    return cv;
}

DivergenceVector divergence_vector(std::span<const GroupStats> stats) {
    check_group_count(stats.size());
    std::vector<Histogram> histograms;
    histograms.reserve(stats.size());
    for (const auto& s : stats) histograms.push_back(s.histogram);
    DivergenceVector dv;
    dv.mean_hist = mean_histogram(histograms);
    dv.kl_bits.reserve(stats.size());
    for (const auto& h : histograms) {
        dv.kl_bits.push_back(kl_divergence(h, dv.mean_hist));
    }
    return dv;
}

double sfi_normal(const SeparationVector& sv) {
    const std::size_t k = sv.per_group.size();
    check_group_count(k);
    return 1.0 - (2.0 / static_cast<double>(k)) * abs_dev_sum(sv.per_group, sv.mean);
}

double sfi_extremal(const SeparationVector& sv) {
    check_group_count(sv.per_group.size());
    return 1.0 - 2.0 * abs_dev_max(sv.per_group, sv.mean);
}

double sfi_weighted(const SeparationVector& sv, const FusionWeights& weights) {
    check_group_count(sv.per_group.size());
    return 1.0 - 2.0 * abs_dev_weighted(sv.per_group, sv.mean, weights);
}

double cfi_normal(const CompactnessVector& cv) {
    const std::size_t k = cv.per_group.size();
    check_group_count(k);
    return 1.0 - (2.0 / static_cast<double>(k)) * abs_dev_sum(cv.per_group, cv.mean);
}

double cfi_extremal(const CompactnessVector& cv) {
    check_group_count(cv.per_group.size());
    return 1.0 - 2.0 * abs_dev_max(cv.per_group, cv.mean);
}

double cfi_weighted(const CompactnessVector& cv, const FusionWeights& weights) {
    check_group_count(cv.per_group.size());
    return 1.0 - 2.0 * abs_dev_weighted(cv.per_group, cv.mean, weights);
}

double dfi_normal(const DivergenceVector& dv) {
    const std::size_t k = dv.kl_bits.size();
    check_group_count(k);
    double acc = 0.0;
    for (double d : dv.kl_bits) acc += d;
    return 1.0 - acc / (static_cast<double>(k) * std::log2(static_cast<double>(k)));
}

double dfi_extremal(const DivergenceVector& dv) {
    const std::size_t k = dv.kl_bits.size();
    check_group_count(k);
    double mx = 0.0;
    for (double d : dv.kl_bits) mx = std::max(mx, d);
    return 1.0 - mx / std::log2(static_cast<double>(k));
}

double dfi_weighted(const DivergenceVector& dv, const FusionWeights& weights) {
    const std::size_t k = dv.kl_bits.size();
    check_group_count(k);
    if (weights.per_group.size() != k) {
        throw ValidationError("weight count does not match group count");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += weights.per_group[i].normalized * dv.kl_bits[i];
    }
    return 1.0 - acc / std::log2(static_cast<double>(k));
}

namespace {

IndexValue clamp_index(double raw) {
    return IndexValue{raw, std::max(raw, 0.0)};
}

void warn_if_clamped(std::vector<ReportWarning>& warnings, const char* name,
                     const IndexValue& value) {
    if (value.raw < 0.0) {
        warnings.push_back({"clamped_negative",
                            std::string(name) + " raw value " + double_repr(value.raw) +
                                " clamped to 0"});
    }
}

}  // namespace

FairnessReport evaluate(const Dataset& dataset, const EvalConfig& config) {
    check_group_count(dataset.group_count());
    if (config.bins < 2) {
        throw ValidationError("bin count must be at least 2");
    }

    FairnessReport report;
    report.config = config;
    report.per_group.reserve(dataset.group_count());
    for (const auto& g : dataset.groups) {
        report.per_group.push_back(group_stats(g, config.bins));
    }

    std::vector<std::size_t> sizes;
    std::vector<std::string> labels;
    sizes.reserve(dataset.group_count());
    labels.reserve(dataset.group_count());
    for (const auto& g : dataset.groups) {
        labels.push_back(g.demographic);
        if (config.ratio_basis == RatioBasis::Records) {
            sizes.push_back(g.record_count());
        } else {
            const auto it = dataset.subject_counts.find(g.demographic);
            if (it == dataset.subject_counts.end() || it->second == 0) {
                throw ValidationError(
                    "subject-based ratios need subject counts; demographic '" +
                    g.demographic + "' has none (ingest pair-format data)");
            }
            sizes.push_back(it->second);
        }
    }
    report.weights = compute_fusion_weights(sizes, labels, config.weight_params);

    const auto sv = separation_vector(report.per_group);
    const auto cv = compactness_vector(report.per_group);
    const auto dv = divergence_vector(report.per_group);

    report.sfi = {clamp_index(sfi_normal(sv)), clamp_index(sfi_extremal(sv)),
                  clamp_index(sfi_weighted(sv, report.weights))};
    report.cfi = {clamp_index(cfi_normal(cv)), clamp_index(cfi_extremal(cv)),
                  clamp_index(cfi_weighted(cv, report.weights))};
    report.dfi = {clamp_index(dfi_normal(dv)), clamp_index(dfi_extremal(dv)),
                  clamp_index(dfi_weighted(dv, report.weights))};

    if (config.discarded_pairs > 0) {
        report.warnings.push_back(
            {"discarded_pairs", std::to_string(config.discarded_pairs) +
                                    " inter-demographic pair(s) excluded from scoring"});
    }
    warn_if_clamped(report.warnings, "sfi_normal", report.sfi.normal);
    warn_if_clamped(report.warnings, "sfi_extremal", report.sfi.extremal);
    warn_if_clamped(report.warnings, "sfi_weighted", report.sfi.weighted);
    warn_if_clamped(report.warnings, "cfi_normal", report.cfi.normal);
    warn_if_clamped(report.warnings, "cfi_extremal", report.cfi.extremal);
    warn_if_clamped(report.warnings, "cfi_weighted", report.cfi.weighted);
    warn_if_clamped(report.warnings, "dfi_normal", report.dfi.normal);
    warn_if_clamped(report.warnings, "dfi_extremal", report.dfi.extremal);
    warn_if_clamped(report.warnings, "dfi_weighted", report.dfi.weighted);

    const double total = static_cast<double>(report.weights.total_size);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (static_cast<double>(sizes[i]) / total < 0.01) {
            report.warnings.push_back(
                {"tiny_group", "demographic '" + labels[i] + "' holds under 1% of the data (" +
                                   std::to_string(sizes[i]) + " of " +
                                   std::to_string(report.weights.total_size) + ")"});
        }
    }
    if (!report.weights.standard) {
        report.warnings.push_back(
            {"nonstandard_weights",
             "fusion weight parameters were overridden; index values are not comparable "
             "with standard reports"});
    }
    return report;
}

}  // namespace fairscore

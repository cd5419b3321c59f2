#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fairscore/stats.hpp"
#include "fairscore/types.hpp"
#include "fairscore/weights.hpp"

namespace fairscore {

// Nine fairness indices over a demographic partition. Each family has a
// per-group disparity variable z_i and three aggregation variants:
//
//   normal    1 - (2/K) * sum |z_i - z_mean|        (DFI: 1/(K log2 K) * sum KL)
//   extremal  1 - 2 * max |z_i - z_mean|            (DFI: 1/log2 K * max KL)
//   weighted  normal with 1/K replaced by fusion weights w_i
//
// The deviation center z_mean stays the unweighted 1/K mean in every
// variant, including the weighted one.

/// Per-group separation |mu_G - mu_I| and its unweighted mean.
struct SeparationVector {
    std::vector<double> per_group;
    double mean = 0.0;
};

/// Per-group combined spread sigma_G + sigma_I and its unweighted mean.
struct CompactnessVector {
    std::vector<double> per_group;
    double mean = 0.0;
};

/// Per-group KL divergence (bits) of the combined score histogram from the
/// mean histogram over all groups.
struct DivergenceVector {
    std::vector<double> kl_bits;
    Histogram mean_hist;
};

SeparationVector separation_vector(std::span<const GroupStats> stats);
CompactnessVector compactness_vector(std::span<const GroupStats> stats);
DivergenceVector divergence_vector(std::span<const GroupStats> stats);

double sfi_normal(const SeparationVector& sv);
double sfi_extremal(const SeparationVector& sv);
double sfi_weighted(const SeparationVector& sv, const FusionWeights& weights);
double cfi_normal(const CompactnessVector& cv);
double cfi_extremal(const CompactnessVector& cv);
double cfi_weighted(const CompactnessVector& cv, const FusionWeights& weights);
double dfi_normal(const DivergenceVector& dv);
double dfi_extremal(const DivergenceVector& dv);
double dfi_weighted(const DivergenceVector& dv, const FusionWeights& weights);

/// An index value before and after clamping. The normal variants cannot go
/// negative; the extremal ones can once K >= 3, so reports headline the
/// clamped value and keep the raw one alongside.
struct IndexValue {
    double raw = 0.0;
    double clamped = 0.0;  // max(raw, 0)
};

struct IndexTriple {
    IndexValue normal;
    IndexValue extremal;
    IndexValue weighted;
};

/// Which group size enters the fusion-weight ratio N_i/N: score records
/// (default) or distinct subjects (pair ingestion only).
enum class RatioBasis { Records, Subjects };

struct EvalConfig {
    std::size_t bins = kDefaultBins;
    RatioBasis ratio_basis = RatioBasis::Records;
    WeightParams weight_params;

    // Provenance, echoed into the report.
    std::string input_format = "labeled";
    Normalization normalization = Normalization::None;
    std::string input_digest;
    std::size_t discarded_pairs = 0;
};

struct ReportWarning {
    std::string code;
    std::string message;
};

struct FairnessReport {
    std::vector<GroupStats> per_group;
    FusionWeights weights;
    IndexTriple sfi;
    IndexTriple cfi;
    IndexTriple dfi;
    EvalConfig config;
    std::vector<ReportWarning> warnings;
};

/// Full pipeline over a validated dataset: per-group statistics, fusion
/// weights, all nine indices, structured warnings. Deterministic for
/// identical input and config.
FairnessReport evaluate(const Dataset& dataset, const EvalConfig& config = {});

}  // namespace fairscore

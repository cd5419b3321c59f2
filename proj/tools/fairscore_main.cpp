#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairscore/format.hpp"
#include "fairscore/ingestion.hpp"
#include "fairscore/measures.hpp"
#include "fairscore/report_io.hpp"
#include "fairscore/synthetic.hpp"
#include "fairscore/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;  // parse/validation/io failures
constexpr int kExitUsage = 2;    // bad command line

struct EvaluateOptions {
    std::string input;
    std::string format = "labeled";
    std::string normalize = "none";
    std::size_t bins = fairscore::kDefaultBins;
    std::string ratio_basis = "records";
    std::string out = "json";
    std::optional<double> weight_c;
    std::optional<double> weight_sigma;
};

struct WeightsOptions {
    std::vector<std::size_t> sizes;
    std::string input;
    std::string format = "labeled";
    std::size_t curve_groups = 0;
    std::size_t resolution = 1000;
};

struct SynthOptions {
    std::string preset;
    std::uint64_t seed = 0;
    std::string out;
    bool imbalanced = false;
};

struct HistOptions {
    std::string input;
    std::size_t bins = fairscore::kDefaultBins;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw fairscore::Error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fairscore::Normalization normalization_from_name(const std::string& name) {
    if (name == "none") return fairscore::Normalization::None;
    if (name == "minmax") return fairscore::Normalization::MinMax;
    return fairscore::Normalization::OneMinus;
}

struct LoadedDataset {
    fairscore::Dataset dataset;
    std::string digest;
    std::size_t discarded_pairs = 0;
};

LoadedDataset load_dataset(const std::string& path, const std::string& format,
                           fairscore::Normalization normalize) {
    const auto bytes = read_file(path);
    std::istringstream in(bytes);

    LoadedDataset loaded;
    loaded.digest = fairscore::fnv1a64_hex(bytes);

    std::vector<fairscore::ScoreRecord> records;
    std::map<std::string, std::size_t> subjects;
    if (format == "pairs") {
        const auto pairs = fairscore::parse_pair_scores(in);
        auto classified = fairscore::classify_pairs(pairs);
        records = std::move(classified.records);
        subjects = std::move(classified.subjects_per_group);
        loaded.discarded_pairs = classified.discarded_inter_demographic;
    } else {
        records = fairscore::parse_labeled_scores(in);
    }
    records = fairscore::normalize_scores(std::move(records), normalize);
    loaded.dataset = fairscore::validate_dataset(records);
    loaded.dataset.subject_counts = std::move(subjects);
    return loaded;
}

int run_evaluate(const EvaluateOptions& opt) {
    const auto normalize = normalization_from_name(opt.normalize);
    auto loaded = load_dataset(opt.input, opt.format, normalize);

    fairscore::EvalConfig config;
    config.bins = opt.bins;
    config.ratio_basis = opt.ratio_basis == "subjects" ? fairscore::RatioBasis::Subjects
                                                       : fairscore::RatioBasis::Records;
    config.weight_params.stability = opt.weight_c.value_or(1.0);
    config.weight_params.sigma = opt.weight_sigma;
    config.input_format = opt.format;
    config.normalization = normalize;
    config.input_digest = loaded.digest;
    config.discarded_pairs = loaded.discarded_pairs;

    const auto report = fairscore::evaluate(loaded.dataset, config);
    if (opt.out == "csv") {
        std::cout << fairscore::report_to_csv(report);
    } else if (opt.out == "text") {
        std::cout << fairscore::report_to_text(report);
    } else {
        std::cout << fairscore::report_to_json(report);
    }
    return kExitOk;
}

int run_weights(const WeightsOptions& opt) {
    const bool have_table_source = !opt.sizes.empty() || !opt.input.empty();

    if (have_table_source) {
        std::vector<std::size_t> sizes = opt.sizes;
        std::vector<std::string> labels;
        if (!opt.input.empty()) {
            const auto loaded =
                load_dataset(opt.input, opt.format, fairscore::Normalization::None);
            for (const auto& g : loaded.dataset.groups) {
                labels.push_back(g.demographic);
                sizes.push_back(g.record_count());
            }
        }
        const auto weights = fairscore::compute_fusion_weights(sizes, labels);
        std::cout << "label,size,raw_weight,normalized_weight\n";
        for (std::size_t i = 0; i < weights.per_group.size(); ++i) {
            const auto& g = weights.per_group[i];
            std::cout << g.label << ',' << sizes[i] << ',' << fairscore::double_repr(g.raw)
                      << ',' << fairscore::double_repr(g.normalized) << '\n';
        }
    }

    if (opt.curve_groups > 0) {
        const auto curve = fairscore::weight_curve(opt.curve_groups, opt.resolution);
        if (have_table_source) std::cout << '\n';
        std::cout << "ratio,raw_weight\n";
        for (const auto& [ratio, raw] : curve) {
            std::cout << fairscore::double_repr(ratio) << ',' << fairscore::double_repr(raw)
                      << '\n';
        }
    }
    return kExitOk;
}

int run_synth(const SynthOptions& opt) {
    const auto scenario = fairscore::scenario_from_name(opt.preset);
    const auto profile = opt.imbalanced ? fairscore::SizeProfile::Imbalanced
                                        : fairscore::SizeProfile::Balanced;
    const auto preset = fairscore::make_preset(scenario, profile);
    const auto records = fairscore::generate_records(preset, opt.seed);

    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
        throw fairscore::Error("cannot open output file: " + opt.out);
    }
    out << "# synthetic preset=" << preset.name
        << " profile=" << (opt.imbalanced ? "imbalanced" : "balanced") << " seed=" << opt.seed
        << "\n";
    fairscore::write_labeled_csv(out, records);
    if (!out) {
        throw fairscore::Error("failed writing output file: " + opt.out);
    }
    return kExitOk;
}

int run_hist(const HistOptions& opt) {
    const auto loaded = load_dataset(opt.input, "labeled", fairscore::Normalization::None);
    std::vector<fairscore::GroupStats> stats;
    stats.reserve(loaded.dataset.group_count());
    for (const auto& g : loaded.dataset.groups) {
        stats.push_back(fairscore::group_stats(g, opt.bins));
    }
    std::cout << fairscore::histogram_csv(stats);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Demographic fairness indices for biometric verification score sets"};
    app.require_subcommand(1);

    EvaluateOptions eval_opt;
    auto* eval_cmd = app.add_subcommand(
        "evaluate", "Compute the fairness report for a score file");
    eval_cmd->add_option("--input", eval_opt.input, "Score CSV file")->required();
    eval_cmd->add_option("--format", eval_opt.format, "Input format")
        ->check(CLI::IsMember({"labeled", "pairs"}))
        ->capture_default_str();
    eval_cmd->add_option("--normalize", eval_opt.normalize, "Score normalization")
        ->check(CLI::IsMember({"none", "minmax", "oneminus"}))
        ->capture_default_str();
    eval_cmd->add_option("--bins", eval_opt.bins, "Histogram bin count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
        ->capture_default_str();
    eval_cmd->add_option("--ratio-basis", eval_opt.ratio_basis, "Group size basis for weights")
        ->check(CLI::IsMember({"records", "subjects"}))
        ->capture_default_str();
    eval_cmd->add_option("--out", eval_opt.out, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    eval_cmd->add_option("--weight-c", eval_opt.weight_c,
                         "Override the weighing stability constant (marks the report non-standard)");
    eval_cmd->add_option("--weight-sigma", eval_opt.weight_sigma,
                         "Override the weighing sigma (marks the report non-standard)");

    WeightsOptions weights_opt;
    auto* weights_cmd =
        app.add_subcommand("weights", "Fusion weights for group sizes, or the weighing curve");
    auto* sizes_opt = weights_cmd->add_option("--sizes", weights_opt.sizes,
                                              "Comma-separated group sizes")
                          ->delimiter(',');
    weights_cmd->add_option("--input", weights_opt.input, "Derive sizes from a score file")
        ->excludes(sizes_opt);
    weights_cmd->add_option("--format", weights_opt.format, "Input format for --input")
        ->check(CLI::IsMember({"labeled", "pairs"}))
        ->capture_default_str();
    weights_cmd->add_option("--curve", weights_opt.curve_groups,
                            "Emit the raw-weight curve for K groups");
    weights_cmd->add_option("--resolution", weights_opt.resolution, "Curve sample count")
        ->capture_default_str();

    SynthOptions synth_opt;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a canonical synthetic score file");
    synth_cmd->add_option("--preset", synth_opt.preset, "Scenario preset")
        ->check(CLI::IsMember({"fair", "unfair", "highly_unfair"}))
        ->required();
    synth_cmd->add_option("--seed", synth_opt.seed, "Generator seed")->required();
    synth_cmd->add_option("--out", synth_opt.out, "Output CSV path")->required();
    synth_cmd->add_flag("--imbalanced", synth_opt.imbalanced,
                        "Use the 100/1000/2000 size profile");

    HistOptions hist_opt;
    auto* hist_cmd =
        app.add_subcommand("hist", "Per-group combined score histograms as CSV");
    hist_cmd->add_option("--input", hist_opt.input, "Labeled score CSV file")->required();
    hist_cmd->add_option("--bins", hist_opt.bins, "Histogram bin count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (eval_cmd->parsed() && eval_opt.format == "labeled" &&
        eval_opt.ratio_basis == "subjects") {
        std::cerr << "error: --ratio-basis subjects requires --format pairs "
                     "(labeled input carries no subject identities)\n";
        return kExitUsage;
    }
    if (weights_cmd->parsed() && weights_opt.sizes.empty() && weights_opt.input.empty() &&
        weights_opt.curve_groups == 0) {
        std::cerr << "error: weights needs --sizes, --input, or --curve\n";
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_evaluate(eval_opt);
        if (weights_cmd->parsed()) return run_weights(weights_opt);
        if (synth_cmd->parsed()) return run_synth(synth_opt);
        if (hist_cmd->parsed()) return run_hist(hist_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

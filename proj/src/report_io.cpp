#include "fairscore/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "fairscore/format.hpp"

namespace fairscore {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* normalization_name(Normalization mode) {
    switch (mode) {
        case Normalization::None: return "none";
        case Normalization::MinMax: return "minmax";
        case Normalization::OneMinus: return "oneminus";
    }
    return "none";
}

const char* ratio_basis_name(RatioBasis basis) {
    return basis == RatioBasis::Records ? "records" : "subjects";
}

ordered_json index_json(const IndexValue& v) {
    return {{"raw", v.raw}, {"clamped", v.clamped}};
}

ordered_json triple_json(const IndexTriple& t) {
    return {{"normal", index_json(t.normal)},
            {"extremal", index_json(t.extremal)},
            {"weighted", index_json(t.weighted)}};
}

}  // namespace

std::string report_to_json(const FairnessReport& report) {
    ordered_json j;

    auto& groups = j["per_group_stats"] = ordered_json::array();
    for (const auto& s : report.per_group) {
        groups.push_back({{"demographic", s.demographic},
                          {"n_genuine", s.n_genuine},
                          {"n_imposter", s.n_imposter},
                          {"mu_genuine", s.mu_genuine},
                          {"mu_imposter", s.mu_imposter},
                          {"sigma_genuine", s.sigma_genuine},
                          {"sigma_imposter", s.sigma_imposter},
                          {"histogram", s.histogram.bins}});
    }

    auto& weights = j["fusion_weights"];
    weights["parameters"] = {{"c", report.weights.stability},
                             {"sigma", report.weights.sigma},
                             {"group_count", report.weights.group_count},
                             {"total_size", report.weights.total_size},
                             {"standard", report.weights.standard}};
    auto& per_group = weights["per_group"] = ordered_json::array();
    for (const auto& g : report.weights.per_group) {
        per_group.push_back(
            {{"label", g.label}, {"raw", g.raw}, {"normalized", g.normalized}});
    }

    j["indices"] = {{"sfi", triple_json(report.sfi)},
                    {"cfi", triple_json(report.cfi)},
                    {"dfi", triple_json(report.dfi)}};

    j["config"] = {{"bins", report.config.bins},
                   {"input_format", report.config.input_format},
                   {"normalization", normalization_name(report.config.normalization)},
                   {"ratio_basis", ratio_basis_name(report.config.ratio_basis)},
                   {"input_digest", report.config.input_digest},
                   {"discarded_pairs", report.config.discarded_pairs}};

    auto& warnings = j["warnings"] = ordered_json::array();
    for (const auto& w : report.warnings) {
        warnings.push_back({{"code", w.code}, {"message", w.message}});
    }

    return j.dump(2) + "\n";
}

std::string report_to_csv(const FairnessReport& report) {
    std::ostringstream out;
    out << "index,variant,raw,clamped\n";
    const auto row = [&](const char* index, const char* variant, const IndexValue& v) {
        out << index << ',' << variant << ',' << double_repr(v.raw) << ','
            << double_repr(v.clamped) << '\n';
    };
    const auto triple = [&](const char* index, const IndexTriple& t) {
        row(index, "normal", t.normal);
        row(index, "extremal", t.extremal);
        row(index, "weighted", t.weighted);
    };
    triple("sfi", report.sfi);
    triple("cfi", report.cfi);
    triple("dfi", report.dfi);
    return out.str();
}

std::string report_to_text(const FairnessReport& report) {
    std::ostringstream out;
    std::size_t total = 0;
    for (const auto& s : report.per_group) total += s.record_count();

    out << "Fairness report: " << report.per_group.size() << " demographic groups, " << total
        << " score records\n";
    out << "  input: " << report.config.input_format
        << "  normalization: " << normalization_name(report.config.normalization)
        << "  bins: " << report.config.bins
        << "  ratio basis: " << ratio_basis_name(report.config.ratio_basis) << "\n";
    if (!report.config.input_digest.empty()) {
        out << "  digest: " << report.config.input_digest << "\n";
    }

    out << "\n  group        n_gen    n_imp   mu_gen   mu_imp  sig_gen  sig_imp   weight\n";
    for (std::size_t i = 0; i < report.per_group.size(); ++i) {
        const auto& s = report.per_group[i];
        out << "  ";
        out << s.demographic;
        for (std::size_t pad = s.demographic.size(); pad < 11; ++pad) out << ' ';
        const auto cell = [&](double v) {
            const auto text = fixed_repr(v, 4);
            for (std::size_t pad = text.size(); pad < 9; ++pad) out << ' ';
            out << text;
        };
        out << ' ';
        const auto count_cell = [&](std::size_t n) {
            const auto text = std::to_string(n);
            for (std::size_t pad = text.size(); pad < 8; ++pad) out << ' ';
            out << text;
        };
        count_cell(s.n_genuine);
        count_cell(s.n_imposter);
        cell(s.mu_genuine);
        cell(s.mu_imposter);
        cell(s.sigma_genuine);
        cell(s.sigma_imposter);
        cell(report.weights.per_group[i].normalized);
        out << '\n';
    }

    out << "\n  index                 normal  extremal  weighted\n";
    const auto index_row = [&](const char* name, const IndexTriple& t) {
        out << "  " << name;
        for (std::size_t pad = std::string(name).size(); pad < 20; ++pad) out << ' ';
        const auto cell = [&](const IndexValue& v) {
            const auto text = fixed_repr(v.clamped, 4);
            for (std::size_t pad = text.size(); pad < 10; ++pad) out << ' ';
            out << text;
        };
        cell(t.normal);
        cell(t.extremal);
        cell(t.weighted);
        out << '\n';
    };
    index_row("separation (SFI)", report.sfi);
    index_row("compactness (CFI)", report.cfi);
    index_row("distribution (DFI)", report.dfi);

    if (!report.warnings.empty()) {
        out << "\n  warnings:\n";
        for (const auto& w : report.warnings) {
            out << "    [" << w.code << "] " << w.message << '\n';
        }
    }
    return out.str();
}

std::string histogram_csv(std::span<const GroupStats> stats) {
    std::ostringstream out;
    out << "group,bin_index,bin_lower,bin_upper,mass\n";
    for (const auto& s : stats) {
        const auto bins = s.histogram.size();
        for (std::size_t b = 0; b < bins; ++b) {
            const double lower = static_cast<double>(b) / static_cast<double>(bins);
            const double upper = static_cast<double>(b + 1) / static_cast<double>(bins);
            out << s.demographic << ',' << b << ',' << double_repr(lower) << ','
                << double_repr(upper) << ',' << double_repr(s.histogram.bins[b]) << '\n';
        }
    }
    return out.str();
}

}  // namespace fairscore

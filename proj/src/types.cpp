#include "fairscore/types.hpp"

#include <map>
#include <utility>

namespace fairscore {

namespace {

bool in_unit_interval(double score) {
    // Also rejects NaN.
    return score >= 0.0 && score <= 1.0;
}

std::string score_range_message(const std::string& label, double score) {
    return "score " + std::to_string(score) + " for demographic '" + label +
           "' is outside [0, 1]";
}

}  // namespace

ScoreRecord make_score_record(std::string demographic, Kind kind, double score) {
    if (demographic.empty()) {
        throw ValidationError("demographic label must be non-empty");
    }
    if (!in_unit_interval(score)) {
        throw ValidationError(score_range_message(demographic, score));
    }
    return ScoreRecord{std::move(demographic), kind, score};
}

std::size_t Dataset::total_records() const noexcept {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.record_count();
    return n;
}

Dataset validate_dataset(std::span<const ScoreRecord> records) {
    if (records.empty()) {
        throw ValidationError("cannot build a dataset from an empty record list");
    }

    std::map<std::string, GroupScores> grouped;  // map keeps labels sorted
    for (const auto& r : records) {
        if (r.demographic.empty()) {
            throw ValidationError("demographic label must be non-empty");
        }
        if (!in_unit_interval(r.score)) {
            throw ValidationError(score_range_message(r.demographic, r.score));
        }
        auto& group = grouped[r.demographic];
        if (group.demographic.empty()) group.demographic = r.demographic;
        (r.kind == Kind::Genuine ? group.genuine : group.imposter).push_back(r.score);
    }

    if (grouped.size() < 2) {
        throw ValidationError("K must be >= 2 demographic groups; found " +
                              std::to_string(grouped.size()));
    }
    for (const auto& [label, group] : grouped) {
        if (group.genuine.size() < 2 || group.imposter.size() < 2) {
            throw ValidationError(
                "demographic '" + label + "' needs at least 2 genuine and 2 imposter scores (has " +
                std::to_string(group.genuine.size()) + " genuine, " +
                std::to_string(group.imposter.size()) + " imposter)");
        }
    }

    Dataset ds;
    ds.groups.reserve(grouped.size());
    for (auto& [label, group] : grouped) ds.groups.push_back(std::move(group));
    return ds;
}

}  // namespace fairscore

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairscore {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Domain-invariant violation (score out of range, bad group structure, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class Kind { Genuine, Imposter };

enum class Normalization { None, MinMax, OneMinus };

/// One match score with its demographic label.
///
/// Records coming out of the parsers may still hold out-of-range scores
/// until normalize_scores has run; make_score_record and validate_dataset
/// are the points where the closed [0,1] bound is enforced.
struct ScoreRecord {
    std::string demographic;
    Kind kind = Kind::Genuine;
    double score = 0.0;
};

/// Checked construction: throws ValidationError on an empty label or a
/// score outside [0,1].
ScoreRecord make_score_record(std::string demographic, Kind kind, double score);

/// All genuine and imposter scores of one demographic group.
struct GroupScores {
    std::string demographic;
    std::vector<double> genuine;
    std::vector<double> imposter;

    std::size_t record_count() const noexcept { return genuine.size() + imposter.size(); }
};

/// A score set partitioned into disjoint demographic groups. Groups are
/// kept in lexicographic label order so every downstream output is
/// deterministic regardless of input order.
struct Dataset {
    std::vector<GroupScores> groups;

    /// Distinct subjects per demographic, when known (filled by pair
    /// ingestion; empty for label-only input).
    std::map<std::string, std::size_t> subject_counts;

    std::size_t group_count() const noexcept { return groups.size(); }
    std::size_t total_records() const noexcept;
};

/// Groups records by demographic label and checks the dataset invariants:
/// at least two groups, every group with >= 2 genuine and >= 2 imposter
/// scores, every score inside [0,1].
Dataset validate_dataset(std::span<const ScoreRecord> records);

}  // namespace fairscore

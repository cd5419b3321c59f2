#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fairscore/types.hpp"

namespace fairscore {

/// One enroll/probe comparison as read from a pair-score file.
struct PairRecord {
    std::string subject_enroll;
    std::string subject_probe;
    std::string demographic_enroll;
    std::string demographic_probe;
    double score = 0.0;
};

// CSV readers. Both formats are comma-separated UTF-8 with a `.` decimal
// point and accept `#`-prefixed comment lines anywhere. The header row is
// validated. Scores must be finite but may lie outside [0,1] here; range
// enforcement happens in normalize_scores / validate_dataset so that
// min-max rescaling of raw matcher output stays possible.

/// Header: demographic,kind,score   (kind: genuine|imposter, case-insensitive)
std::vector<ScoreRecord> parse_labeled_scores(std::istream& in);

/// Header: subject_enroll,subject_probe,demographic_enroll,demographic_probe,score
std::vector<PairRecord> parse_pair_scores(std::istream& in);

struct PairClassification {
    std::vector<ScoreRecord> records;
    std::size_t discarded_inter_demographic = 0;
    std::map<std::string, std::size_t> subjects_per_group;
};

/// Same-subject pairs become genuine scores; cross-subject pairs within one
/// demographic become imposter scores; cross-demographic pairs are dropped
/// and counted, never silently. A subject appearing under two demographic
/// labels violates the disjoint-partition assumption and throws.
PairClassification classify_pairs(std::span<const PairRecord> pairs);

/// None validates scores as already in [0,1]; MinMax affinely maps the
/// global [min,max] onto [0,1] (min/max over all records, never per group,
/// which would mask disparity); OneMinus flips distance-like scores s -> 1-s.
std::vector<ScoreRecord> normalize_scores(std::vector<ScoreRecord> records,
                                          Normalization mode);

}  // namespace fairscore

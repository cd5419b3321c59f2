#include "fairscore/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <utility>

#include "fairscore/kernels.hpp"

namespace fairscore {

namespace {

std::string trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool skippable(const std::string& line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

double parse_score(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError(line_no, "cannot parse score '" + field + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "score '" + field + "' is not finite");
    }
    return value;
}

Kind parse_kind(const std::string& field, std::size_t line_no) {
    const auto k = lower(field);
    if (k == "genuine") return Kind::Genuine;
    if (k == "imposter") return Kind::Imposter;
    throw ParseError(line_no, "unknown kind '" + field + "' (expected genuine or imposter)");
}

std::string nonempty(std::string field, const char* what, std::size_t line_no) {
    if (field.empty()) {
        throw ParseError(line_no, std::string(what) + " must be non-empty");
    }
    return field;
}

// Reads lines, skipping comments and blanks, validates the header, then
// hands each data row (split into the expected number of fields) to `row`.
template <typename RowFn>
void read_csv(std::istream& in, const std::string& expected_header,
              std::size_t expected_fields, RowFn row) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        if (!header_seen) {
            if (lower(trim(line)) != expected_header) {
                throw ParseError(line_no, "expected header '" + expected_header + "', got '" +
                                              trim(line) + "'");
            }
            header_seen = true;
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != expected_fields) {
            throw ParseError(line_no, "expected " + std::to_string(expected_fields) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        row(std::move(fields), line_no);
    }
    if (!header_seen) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing header '" + expected_header + "'");
    }
}

}  // namespace

std::vector<ScoreRecord> parse_labeled_scores(std::istream& in) {
    std::vector<ScoreRecord> records;
    read_csv(in, "demographic,kind,score", 3,
             [&](std::vector<std::string> f, std::size_t line_no) {
                 ScoreRecord r;
                 r.demographic = nonempty(std::move(f[0]), "demographic", line_no);
                 r.kind = parse_kind(f[1], line_no);
                 r.score = parse_score(f[2], line_no);
                 records.push_back(std::move(r));
             });
    return records;
}

std::vector<PairRecord> parse_pair_scores(std::istream& in) {
    std::vector<PairRecord> pairs;
    read_csv(in, "subject_enroll,subject_probe,demographic_enroll,demographic_probe,score", 5,
             [&](std::vector<std::string> f, std::size_t line_no) {
                 PairRecord p;
                 p.subject_enroll = nonempty(std::move(f[0]), "subject_enroll", line_no);
                 p.subject_probe = nonempty(std::move(f[1]), "subject_probe", line_no);
                 p.demographic_enroll = nonempty(std::move(f[2]), "demographic_enroll", line_no);
                 p.demographic_probe = nonempty(std::move(f[3]), "demographic_probe", line_no);
                 p.score = parse_score(f[4], line_no);
                 pairs.push_back(std::move(p));
             });
    return pairs;
}

PairClassification classify_pairs(std::span<const PairRecord> pairs) {
    PairClassification out;
    std::map<std::string, std::string> subject_demographic;

    const auto note_subject = [&](const std::string& subject, const std::string& demographic) {
        auto [it, inserted] = subject_demographic.try_emplace(subject, demographic);
        if (!inserted && it->second != demographic) {
            throw ValidationError("subject '" + subject + "' appears in demographics '" +
                                  it->second + "' and '" + demographic +
                                  "'; groups must be disjoint");
        }
    };

    for (const auto& p : pairs) {
        note_subject(p.subject_enroll, p.demographic_enroll);
        note_subject(p.subject_probe, p.demographic_probe);
        if (p.subject_enroll == p.subject_probe) {
            // Same identity: genuine. Demographics agree, enforced above.
            out.records.push_back({p.demographic_enroll, Kind::Genuine, p.score});
        } else if (p.demographic_enroll == p.demographic_probe) {
            out.records.push_back({p.demographic_enroll, Kind::Imposter, p.score});
        } else {
            ++out.discarded_inter_demographic;
        }
    }

    for (const auto& [subject, demographic] : subject_demographic) {
        ++out.subjects_per_group[demographic];
    }
    return out;
}

std::vector<ScoreRecord> normalize_scores(std::vector<ScoreRecord> records,
                                          Normalization mode) {
    switch (mode) {
        case Normalization::None:
            for (const auto& r : records) {
                if (!(r.score >= 0.0 && r.score <= 1.0)) {
                    throw ValidationError("score " + std::to_string(r.score) +
                                          " for demographic '" + r.demographic +
                                          "' is outside [0, 1]; pick a normalization mode");
                }
            }
            return records;
        case Normalization::OneMinus:
            for (auto& r : records) {
                if (!(r.score >= 0.0 && r.score <= 1.0)) {
                    throw ValidationError("one-minus normalization needs scores in [0, 1], got " +
                                          std::to_string(r.score));
                }
                r.score = 1.0 - r.score;
            }
            return records;
        case Normalization::MinMax: {
            if (records.empty()) {
                throw ValidationError("cannot min-max normalize an empty record list");
            }
            std::vector<double> scores;
            scores.reserve(records.size());
            for (const auto& r : records) {
                if (!std::isfinite(r.score)) {
                    throw ValidationError("cannot min-max normalize non-finite score");
                }
                scores.push_back(r.score);
            }
            // One global range over all demographics: per-group ranges would
            // rescale disparity away.
            const auto [lo, hi] = kernels::min_max(scores);
            if (!(hi > lo)) {
                throw ValidationError("min-max normalization undefined: all scores equal " +
                                      std::to_string(lo));
            }
            const double span = hi - lo;
            for (auto& r : records) r.score = (r.score - lo) / span;
            return records;
        }
    }
    throw ValidationError("unknown normalization mode");
}

}  // namespace fairscore

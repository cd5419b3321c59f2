#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fairscore/ingestion.hpp"

using namespace fairscore;

TEST_CASE("parse_labeled_scores maps rows to records") {
    std::istringstream in(
        "demographic,kind,score\n"
        "# a comment\n"
        "d1,genuine,0.91\n"
        "d2,imposter,0.07\n"
        "\n"
        "d1,GENUINE,0.5\n");
    const auto records = parse_labeled_scores(in);
    REQUIRE(records.size() == 3);
    CHECK(records[0].demographic == "d1");
    CHECK(records[0].kind == Kind::Genuine);
    CHECK(records[0].score == 0.91);
    CHECK(records[1].demographic == "d2");
    CHECK(records[1].kind == Kind::Imposter);
    CHECK(records[1].score == 0.07);
    CHECK(records[2].kind == Kind::Genuine);  // kind token is case-insensitive
}

TEST_CASE("parse_labeled_scores reports the offending line") {
    std::istringstream bad_number(
        "demographic,kind,score\n"
        "d1,genuine,abc\n");
    CHECK_THROWS_WITH_AS(parse_labeled_scores(bad_number),
                         doctest::Contains("line 2"), ParseError);

    std::istringstream bad_kind(
        "demographic,kind,score\n"
        "d1,half-genuine,0.5\n");
    CHECK_THROWS_WITH_AS(parse_labeled_scores(bad_kind),
                         doctest::Contains("unknown kind"), ParseError);

    std::istringstream bad_columns(
        "demographic,kind,score\n"
        "d1,genuine\n");
    CHECK_THROWS_WITH_AS(parse_labeled_scores(bad_columns),
                         doctest::Contains("expected 3 fields"), ParseError);

    std::istringstream bad_header("kind,demographic,score\nd1,genuine,0.5\n");
    CHECK_THROWS_WITH_AS(parse_labeled_scores(bad_header),
                         doctest::Contains("expected header"), ParseError);

    std::istringstream empty("");
    CHECK_THROWS_AS(parse_labeled_scores(empty), ParseError);
}

TEST_CASE("parse_labeled_scores tolerates CRLF and keeps out-of-range scores") {
    std::istringstream in("demographic,kind,score\r\nd1,genuine,2.5\r\n");
    const auto records = parse_labeled_scores(in);
    REQUIRE(records.size() == 1);
    CHECK(records[0].score == 2.5);  // range is enforced later, by normalization
}

TEST_CASE("parse_pair_scores maps rows to pair records") {
    std::istringstream in(
        "subject_enroll,subject_probe,demographic_enroll,demographic_probe,score\n"
        "s1,s1,d1,d1,0.95\n"
        "s1,s2,d1,d1,0.12\n"
        "s1,s2,d1,d2,0.10\n");
    const auto pairs = parse_pair_scores(in);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].subject_enroll == "s1");
    CHECK(pairs[0].subject_probe == "s1");
    CHECK(pairs[0].score == 0.95);
    CHECK(pairs[2].demographic_probe == "d2");
}

TEST_CASE("classify_pairs routes genuine, imposter, and discarded pairs") {
    const std::vector<PairRecord> pairs = {
        {"s1", "s1", "d1", "d1", 0.95},
        {"s1", "s2", "d1", "d1", 0.12},
        {"s1", "s3", "d1", "d2", 0.10},
    };
    const auto out = classify_pairs(pairs);
    REQUIRE(out.records.size() == 2);
    CHECK(out.records[0].kind == Kind::Genuine);
    CHECK(out.records[0].demographic == "d1");
    CHECK(out.records[0].score == 0.95);
    CHECK(out.records[1].kind == Kind::Imposter);
    CHECK(out.records[1].demographic == "d1");
    CHECK(out.discarded_inter_demographic == 1);
    CHECK(out.subjects_per_group.at("d1") == 2);  // s1, s2
    CHECK(out.subjects_per_group.at("d2") == 1);  // s3
}

TEST_CASE("classify_pairs rejects a subject in two demographics") {
    const std::vector<PairRecord> pairs = {
        {"s1", "s2", "d1", "d1", 0.5},
        {"s3", "s1", "d2", "d2", 0.5},  // s1 reappears under d2
    };
    CHECK_THROWS_WITH_AS(classify_pairs(pairs), doctest::Contains("disjoint"),
                         ValidationError);
}

TEST_CASE("classify_pairs conserves records and never mixes demographics") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<PairRecord> pairs;
    for (int i = 0; i < 400; ++i) {
        const auto a = rng() % 40;
        const auto b = rng() % 40;
        // Subject s<n> lives in demographic d<n % 4>, so labels stay consistent.
        pairs.push_back({"s" + std::to_string(a), "s" + std::to_string(b),
                         "d" + std::to_string(a % 4), "d" + std::to_string(b % 4),
                         unit(rng)});
    }
    const auto out = classify_pairs(pairs);
    std::size_t genuine = 0, imposter = 0;
    for (const auto& r : out.records) {
        (r.kind == Kind::Genuine ? genuine : imposter) += 1;
    }
    CHECK(genuine + imposter + out.discarded_inter_demographic == pairs.size());
    for (const auto& r : out.records) {
        CHECK_FALSE(r.demographic.empty());
    }
    // Imposter records only ever come from same-demographic pairs.
    for (const auto& p : pairs) {
        if (p.subject_enroll != p.subject_probe &&
            p.demographic_enroll != p.demographic_probe) {
            continue;  // discarded, fine
        }
    }
    std::size_t subjects = 0;
    for (const auto& [label, count] : out.subjects_per_group) subjects += count;
    CHECK(subjects == 40);
}

TEST_CASE("normalize_scores handles all three modes") {
    const auto rec = [](double s) { return ScoreRecord{"d1", Kind::Genuine, s}; };

    SUBCASE("none is the identity on valid scores") {
        auto out = normalize_scores({rec(0.5)}, Normalization::None);
        CHECK(out[0].score == 0.5);
        CHECK_THROWS_AS(normalize_scores({rec(1.5)}, Normalization::None), ValidationError);
    }
    SUBCASE("one-minus reflects the endpoints") {
        auto out = normalize_scores({rec(0.0), rec(1.0), rec(0.25)}, Normalization::OneMinus);
        CHECK(out[0].score == 1.0);
        CHECK(out[1].score == 0.0);
        CHECK(out[2].score == 0.75);
        CHECK_THROWS_AS(normalize_scores({rec(1.5)}, Normalization::OneMinus), ValidationError);
    }
    SUBCASE("min-max maps the global range onto [0,1]") {
        auto out = normalize_scores({rec(2.0), rec(4.0), rec(6.0)}, Normalization::MinMax);
        CHECK(out[0].score == 0.0);
        CHECK(out[1].score == 0.5);
        CHECK(out[2].score == 1.0);
    }
    SUBCASE("min-max rejects constant and empty inputs") {
        CHECK_THROWS_WITH_AS(normalize_scores({rec(3.0), rec(3.0)}, Normalization::MinMax),
                             doctest::Contains("all scores equal"), ValidationError);
        CHECK_THROWS_AS(normalize_scores({}, Normalization::MinMax), ValidationError);
    }
}

TEST_CASE("min-max output spans exactly [0,1] on non-constant input") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> wide(-10.0, 10.0);
    std::vector<ScoreRecord> records;
    for (int i = 0; i < 100; ++i) records.push_back({"d1", Kind::Genuine, wide(rng)});

    const auto out = normalize_scores(records, Normalization::MinMax);
    double lo = 1.0, hi = 0.0;
    for (const auto& r : out) {
        CHECK(r.score >= 0.0);
        CHECK(r.score <= 1.0);
        lo = std::min(lo, r.score);
        hi = std::max(hi, r.score);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
}

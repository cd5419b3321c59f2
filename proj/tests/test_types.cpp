#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "fairscore/types.hpp"

using namespace fairscore;

namespace {

std::vector<ScoreRecord> minimal_two_groups() {
    return {
        {"d1", Kind::Genuine, 0.9},  {"d1", Kind::Genuine, 0.8},
        {"d1", Kind::Imposter, 0.1}, {"d1", Kind::Imposter, 0.2},
        {"d2", Kind::Genuine, 0.7},  {"d2", Kind::Genuine, 0.6},
        {"d2", Kind::Imposter, 0.3}, {"d2", Kind::Imposter, 0.4},
    };
}

}  // namespace

TEST_CASE("make_score_record enforces the closed unit interval") {
    CHECK(make_score_record("d1", Kind::Genuine, 0.0).score == 0.0);
    CHECK(make_score_record("d1", Kind::Genuine, 1.0).score == 1.0);
    CHECK_THROWS_AS(make_score_record("d1", Kind::Genuine, 1.3), ValidationError);
    CHECK_THROWS_AS(make_score_record("d1", Kind::Genuine, -0.1), ValidationError);
    CHECK_THROWS_AS(make_score_record("d1", Kind::Genuine, std::nan("")), ValidationError);
    CHECK_THROWS_AS(make_score_record("", Kind::Genuine, 0.5), ValidationError);
}

TEST_CASE("validate_dataset accepts the minimal two-group input") {
    const auto records = minimal_two_groups();
    const auto ds = validate_dataset(records);
    CHECK(ds.group_count() == 2);
    CHECK(ds.total_records() == 8);
    CHECK(ds.groups[0].demographic == "d1");
    CHECK(ds.groups[1].demographic == "d2");
    CHECK(ds.groups[0].genuine.size() == 2);
    CHECK(ds.groups[0].imposter.size() == 2);
}

TEST_CASE("validate_dataset rejects a single demographic group") {
    std::vector<ScoreRecord> records = {
        {"d1", Kind::Genuine, 0.9},
        {"d1", Kind::Genuine, 0.8},
        {"d1", Kind::Imposter, 0.1},
        {"d1", Kind::Imposter, 0.2},
    };
    CHECK_THROWS_WITH_AS(validate_dataset(records),
                         doctest::Contains("K must be >= 2"), ValidationError);
}

TEST_CASE("validate_dataset rejects out-of-range scores") {
    auto records = minimal_two_groups();
    records[3].score = 1.3;
    CHECK_THROWS_WITH_AS(validate_dataset(records), doctest::Contains("outside [0, 1]"),
                         ValidationError);
}

TEST_CASE("validate_dataset rejects groups with too few scores") {
    auto records = minimal_two_groups();
    records.pop_back();  // d2 now has one imposter score
    CHECK_THROWS_WITH_AS(validate_dataset(records), doctest::Contains("at least 2"),
                         ValidationError);
    CHECK_THROWS_AS(validate_dataset(std::vector<ScoreRecord>{}), ValidationError);
}

TEST_CASE("grouping is a conserving partition") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<std::string> labels = {"a", "b", "c", "d"};

    std::vector<ScoreRecord> records;
    std::vector<std::size_t> expected_counts(labels.size(), 0);
    for (const auto& label : labels) {  // make every group valid first
        records.push_back({label, Kind::Genuine, unit(rng)});
        records.push_back({label, Kind::Genuine, unit(rng)});
        records.push_back({label, Kind::Imposter, unit(rng)});
        records.push_back({label, Kind::Imposter, unit(rng)});
    }
    for (int i = 0; i < 500; ++i) {
        const auto g = static_cast<std::size_t>(rng() % labels.size());
        records.push_back({labels[g], rng() % 2 == 0 ? Kind::Genuine : Kind::Imposter,
                           unit(rng)});
    }
    for (const auto& r : records) {
        const auto it = std::find(labels.begin(), labels.end(), r.demographic);
        ++expected_counts[static_cast<std::size_t>(it - labels.begin())];
    }

    const auto ds = validate_dataset(records);
    CHECK(ds.total_records() == records.size());
    REQUIRE(ds.group_count() == labels.size());
    for (std::size_t g = 0; g < labels.size(); ++g) {
        CHECK(ds.groups[g].demographic == labels[g]);
        CHECK(ds.groups[g].record_count() == expected_counts[g]);
    }
}

TEST_CASE("validate_dataset is insensitive to record order") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ScoreRecord> records;
    for (int i = 0; i < 200; ++i) {
        records.push_back({i % 3 == 0 ? "x" : (i % 3 == 1 ? "y" : "z"),
                           rng() % 2 == 0 ? Kind::Genuine : Kind::Imposter, unit(rng)});
    }
    auto shuffled = records;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    auto a = validate_dataset(records);
    auto b = validate_dataset(shuffled);
    REQUIRE(a.group_count() == b.group_count());
    for (std::size_t g = 0; g < a.group_count(); ++g) {
        CHECK(a.groups[g].demographic == b.groups[g].demographic);
        auto ag = a.groups[g].genuine, bg = b.groups[g].genuine;
        auto ai = a.groups[g].imposter, bi = b.groups[g].imposter;
        std::sort(ag.begin(), ag.end());
        std::sort(bg.begin(), bg.end());
        std::sort(ai.begin(), ai.end());
        std::sort(bi.begin(), bi.end());
        CHECK(ag == bg);
        CHECK(ai == bi);
    }
}

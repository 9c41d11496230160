#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"

#include "crowdex/simulator.hpp"

using namespace crowdex;

namespace {

const char* kConfigJson = R"({
  "gold": {"G1": 1, "G2": 2, "G3": 3, "G4": 4, "G5": 5},
  "test_conditions": ["T1", "T2", "T3"]
})";

CampaignConfig config() { return CampaignConfig::fromJson(kConfigJson); }

double meanDegreeWithPrefix(const ScoreTable& table, const std::string& prefix) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const ScoreRow& row : table.rows) {
        if (row.participant_id.rfind(prefix, 0) == 0) {
            sum += row.degree;
            ++n;
        }
    }
    REQUIRE(n > 0);
    return sum / double(n);
}

} // namespace

TEST_CASE("portable rng: reproducible, bounded, and unbiased enough") {
    PortableRng a(42);
    PortableRng b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniformInt(1, 5) == b.uniformInt(1, 5));
    }
    PortableRng c(43);
    int agreements = 0;
    for (int i = 0; i < 1000; ++i) {
        agreements += a.uniformInt(1, 5) == c.uniformInt(1, 5);
    }
    CHECK(agreements < 400); // different seeds diverge

    // Chi-squared over the five buckets; df = 4, so 30 is far out in the tail.
    PortableRng d(7);
    std::map<int, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const int v = d.uniformInt(1, 5);
        REQUIRE(v >= 1);
        REQUIRE(v <= 5);
        ++counts[v];
    }
    const double expected = draws / 5.0;
    double chi2 = 0.0;
    for (int v = 1; v <= 5; ++v) {
        const double diff = counts[v] - expected;
        chi2 += diff * diff / expected;
    }
    CHECK(chi2 < 30.0);

    PortableRng e(7);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double z = e.standardNormal();
        sum += z;
        sum_sq += z * z;
    }
    const double mean = sum / draws;
    const double var = sum_sq / draws - mean * mean;
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.1);
}

TEST_CASE("population spec parsing and validation") {
    const auto spec = PopulationSpec::fromJson(
        R"({"perfect": 2, "noisy": 3, "spammer": 4, "inverted": 1,
            "noise_sigma": 0.5, "seed": 42, "test_condition_means": {"T1": 2.5}})");
    CHECK(spec.perfect == 2);
    CHECK(spec.noisy == 3);
    CHECK(spec.spammer == 4);
    CHECK(spec.inverted == 1);
    CHECK(spec.noise_sigma == 0.5);
    CHECK(spec.seed == 42);
    CHECK(spec.test_condition_means.at("T1") == 2.5);

    // Defaults: counts 0, sigma 1, seed 0.
    const auto minimal = PopulationSpec::fromJson(R"({"perfect": 1})");
    CHECK(minimal.noisy == 0);
    CHECK(minimal.noise_sigma == 1.0);
    CHECK(minimal.seed == 0);

    CHECK_THROWS_AS(PopulationSpec::fromJson("[]"), InvalidSpec);
    CHECK_THROWS_AS(PopulationSpec::fromJson(R"({"perfect": -1})"), InvalidSpec);
    CHECK_THROWS_AS(PopulationSpec::fromJson(R"({})"), InvalidSpec); // empty population
    CHECK_THROWS_AS(PopulationSpec::fromJson(R"({"perfect": 1, "noise_sigma": -0.1})"),
                    InvalidSpec);
    CHECK_THROWS_AS(PopulationSpec::fromJson(R"({"perfect": 1, "spamer": 3})"), InvalidSpec);
    CHECK_THROWS_AS(
        PopulationSpec::fromJson(R"({"perfect": 1, "test_condition_means": {"T1": 9}})"),
        InvalidSpec);
    CHECK_THROWS_AS(PopulationSpec::fromJson(R"({"perfect": 1, "seed": -3})"), InvalidSpec);

    CHECK(defaultTestMean(0, 1) == doctest::Approx(3.0));
    CHECK(defaultTestMean(0, 3) == doctest::Approx(1.5));
    CHECK(defaultTestMean(1, 3) == doctest::Approx(3.0));
    CHECK(defaultTestMean(2, 3) == doctest::Approx(4.5));
}

TEST_CASE("generated records: shape, ids, and archetype behavior") {
    PopulationSpec spec;
    spec.perfect = 2;
    spec.noisy = 1;
    spec.spammer = 1;
    spec.inverted = 1;
    spec.noise_sigma = 0.0;
    spec.seed = 9;
    const auto cfg = config();
    const auto records = generatePopulation(spec, cfg);
    REQUIRE(records.size() == 5 * 8); // five participants, eight conditions

    // Order: archetype blocks, conditions canonical within a participant.
    CHECK(records[0].participant_id == "perfect_0001");
    CHECK(records[0].condition_id == "G1");
    CHECK(records[0].panel_id == "panel_1");
    CHECK(records[0].hit_id == "hit_1");
    CHECK(records[8].participant_id == "perfect_0002");
    CHECK(records[8].panel_id == "panel_2");
    CHECK(records[16].participant_id == "noisy_0001");
    CHECK(records[16].panel_id == "panel_3");
    CHECK(records[24].participant_id == "spammer_0001");
    CHECK(records[24].panel_id == "panel_4");
    CHECK(records[32].participant_id == "inverted_0001");
    CHECK(records[32].panel_id == "panel_1"); // cycles back

    std::map<std::string, std::map<std::string, int>> ratings;
    for (const auto& r : records) {
        ratings[r.participant_id][r.condition_id] = r.rating;
    }
    for (int i = 1; i <= 5; ++i) {
        const auto gold = "G" + std::to_string(i);
        CHECK(ratings["perfect_0001"][gold] == i);
        CHECK(ratings["noisy_0001"][gold] == i); // sigma 0 degenerates to perfect
        CHECK(ratings["inverted_0001"][gold] == 6 - i);
    }
    // Default test targets for three conditions: 1.5, 3.0, 4.5 round to 2, 3, 4
    // (1.5 and 4.5 round away from zero: 2 and 5... lround(1.5) = 2, lround(4.5) = 5).
    CHECK(ratings["perfect_0001"]["T1"] == 2);
    CHECK(ratings["perfect_0001"]["T2"] == 3);
    CHECK(ratings["perfect_0001"]["T3"] == 5);
    CHECK(ratings["inverted_0001"]["T2"] == 3); // non-spammers aim at the target

    // Everything ingests and scores.
    std::ostringstream csv;
    writeResponsesCsv(csv, records);
    std::istringstream in(csv.str());
    const auto store = ingestResponses(in, cfg);
    const auto table = scoreCampaign(store);
    CHECK(table.rows.size() == 5);
    CHECK(table.unscorable_count == 0);
    for (const ScoreRow& row : table.rows) {
        if (row.participant_id.rfind("perfect", 0) == 0 ||
            row.participant_id.rfind("noisy", 0) == 0) {
            CHECK(row.degree == doctest::Approx(1.0).epsilon(1e-12));
        }
        if (row.participant_id.rfind("inverted", 0) == 0) {
            CHECK(row.degree == doctest::Approx(1.0 / 18.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("generation is deterministic in the seed") {
    PopulationSpec spec;
    spec.noisy = 3;
    spec.spammer = 3;
    spec.seed = 1234;
    const auto cfg = config();
    const auto first = generatePopulation(spec, cfg);
    const auto second = generatePopulation(spec, cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].participant_id == second[i].participant_id);
        CHECK(first[i].condition_id == second[i].condition_id);
        CHECK(first[i].rating == second[i].rating);
    }

    spec.seed = 1235;
    const auto other = generatePopulation(spec, cfg);
    int differing = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        differing += first[i].rating != other[i].rating;
    }
    CHECK(differing > 0);
}

TEST_CASE("unknown target-mean condition is rejected at generation") {
    PopulationSpec spec;
    spec.perfect = 1;
    spec.test_condition_means["G1"] = 2.0; // gold, not test
    CHECK_THROWS_AS(generatePopulation(spec, config()), InvalidSpec);
    spec.test_condition_means.clear();
    spec.test_condition_means["nope"] = 2.0;
    CHECK_THROWS_AS(generatePopulation(spec, config()), InvalidSpec);
}

TEST_CASE("archetypes separate in mean degree") {
    PopulationSpec spec;
    spec.perfect = 20;
    spec.noisy = 20;
    spec.spammer = 40;
    spec.noise_sigma = 1.0;
    spec.seed = 7;
    const auto cfg = config();
    std::ostringstream csv;
    writeResponsesCsv(csv, generatePopulation(spec, cfg));
    std::istringstream in(csv.str());
    const auto table = scoreCampaign(ingestResponses(in, cfg));
    REQUIRE(table.rows.size() == 80);

    const double perfect = meanDegreeWithPrefix(table, "perfect_");
    const double noisy = meanDegreeWithPrefix(table, "noisy_");
    const double spammer = meanDegreeWithPrefix(table, "spammer_");
    CHECK(perfect == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect - noisy > 0.05);
    CHECK(noisy - spammer > 0.05);
}

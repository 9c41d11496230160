#include "crowdex/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace crowdex {

int PortableRng::uniformInt(int lo, int hi) {
    const std::uint64_t range = std::uint64_t(hi - lo) + 1;
    // Drop the top partial block so every value is equally likely.
    const std::uint64_t limit = (std::mt19937_64::max() / range) * range;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + int(draw % range);
}

double PortableRng::unitInterval() {
    // Top 53 bits, shifted into (0, 1] so the log below never sees zero.
    return double((engine_() >> 11) + 1) * 0x1.0p-53;
}

double PortableRng::standardNormal() {
    const double u1 = unitInterval();
    const double u2 = unitInterval();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

PopulationSpec PopulationSpec::fromJson(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("population spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidSpec("population spec must be a JSON object");
    }

    PopulationSpec spec;
    auto count = [&](const char* key, int& into) {
        if (!doc.contains(key)) {
            return;
        }
        if (!doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
            throw InvalidSpec(std::string(key) + " must be a non-negative integer");
        }
        into = doc[key].get<int>();
    };
    count("perfect", spec.perfect);
    count("noisy", spec.noisy);
    count("spammer", spec.spammer);
    count("inverted", spec.inverted);

    if (doc.contains("noise_sigma")) {
        if (!doc["noise_sigma"].is_number() || doc["noise_sigma"].get<double>() < 0.0) {
            throw InvalidSpec("noise_sigma must be a non-negative number");
        }
        spec.noise_sigma = doc["noise_sigma"].get<double>();
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
            throw InvalidSpec("seed must be an unsigned integer");
        }
        if (doc["seed"].is_number_integer() && doc["seed"].get<long long>() < 0) {
            throw InvalidSpec("seed must be an unsigned integer");
        }
        spec.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("test_condition_means")) {
        if (!doc["test_condition_means"].is_object()) {
            throw InvalidSpec("test_condition_means must map condition ids to numbers");
        }
        for (const auto& [id, value] : doc["test_condition_means"].items()) {
            if (!value.is_number()) {
                throw InvalidSpec("target mean of \"" + id + "\" is not a number");
            }
            const double mean = value.get<double>();
            if (mean < kRatingMin || mean > kRatingMax) {
                throw InvalidSpec("target mean of \"" + id + "\" outside the rating scale");
            }
            spec.test_condition_means[id] = mean;
        }
    }

    static const std::set<std::string> known{"perfect",     "noisy", "spammer",
                                             "inverted",    "noise_sigma", "seed",
                                             "test_condition_means"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.count(key)) {
            throw InvalidSpec("unknown key in population spec: \"" + key + "\"");
        }
    }

    if (spec.perfect + spec.noisy + spec.spammer + spec.inverted <= 0) {
        throw InvalidSpec("population is empty");
    }
    return spec;
}

double defaultTestMean(std::size_t index, std::size_t count) {
    const double lo = kRatingMin + 0.5;
    const double hi = kRatingMax - 0.5;
    if (count <= 1) {
        return (kRatingMin + kRatingMax) / 2.0;
    }
    return lo + (hi - lo) * double(index) / double(count - 1);
}

namespace {

int clampRound(double value) {
    const long rounded = std::lround(value);
    return int(std::clamp(rounded, long(kRatingMin), long(kRatingMax)));
}

enum class Archetype { Perfect, Noisy, Spammer, Inverted };

const char* archetypePrefix(Archetype a) {
    switch (a) {
        case Archetype::Perfect: return "perfect";
        case Archetype::Noisy: return "noisy";
        case Archetype::Spammer: return "spammer";
        case Archetype::Inverted: return "inverted";
    }
    throw Error("unknown archetype");
}

std::string participantId(Archetype a, int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d", index + 1);
    return std::string(archetypePrefix(a)) + "_" + buf;
}

} // namespace

std::vector<ResponseRecord> generatePopulation(const PopulationSpec& spec,
                                               const CampaignConfig& config) {
    if (spec.perfect + spec.noisy + spec.spammer + spec.inverted <= 0) {
        throw InvalidSpec("population is empty");
    }
    for (const auto& [id, mean] : spec.test_condition_means) {
        const auto& tests = config.testConditions();
        if (std::find(tests.begin(), tests.end(), id) == tests.end()) {
            throw InvalidSpec("target mean for \"" + id + "\", which is not a test condition");
        }
    }

    // Resolve each condition to its rating model once.
    struct ConditionModel {
        std::string id;
        bool gold;
        double target; // expected note for gold, target mean for test
    };
    std::vector<ConditionModel> models;
    std::size_t test_index = 0;
    const std::size_t test_count = config.testConditions().size();
    for (const Condition& c : config.conditions()) {
        if (c.kind == ConditionKind::Gold) {
            models.push_back(ConditionModel{c.id, true, double(c.expected_note)});
        } else {
            const auto it = spec.test_condition_means.find(c.id);
            const double mean =
                it != spec.test_condition_means.end() ? it->second : defaultTestMean(test_index, test_count);
            models.push_back(ConditionModel{c.id, false, mean});
            ++test_index;
        }
    }

    PortableRng rng(spec.seed);
    std::vector<ResponseRecord> records;
    records.reserve(std::size_t(spec.perfect + spec.noisy + spec.spammer + spec.inverted) *
                    models.size());

    int global_index = 0;
    auto emit = [&](Archetype archetype, int count) {
        for (int i = 0; i < count; ++i, ++global_index) {
            const std::string participant = participantId(archetype, i);
            const std::string suffix = std::to_string(global_index % 4 + 1);
            const std::string panel = "panel_" + suffix;
            const std::string hit = "hit_" + suffix;
            for (const ConditionModel& model : models) {
                int rating = 0;
                switch (archetype) {
                    case Archetype::Perfect:
                        rating = clampRound(model.target);
                        break;
                    case Archetype::Noisy:
                        rating = clampRound(model.target + spec.noise_sigma * rng.standardNormal());
                        break;
                    case Archetype::Spammer:
                        rating = rng.uniformInt(kRatingMin, kRatingMax);
                        break;
                    case Archetype::Inverted:
                        rating = model.gold
                                     ? (kRatingMin + kRatingMax) - int(model.target)
                                     : clampRound(model.target);
                        break;
                }
                records.push_back(ResponseRecord{participant, panel, hit, model.id, rating});
            }
        }
    };
    emit(Archetype::Perfect, spec.perfect);
    emit(Archetype::Noisy, spec.noisy);
    emit(Archetype::Spammer, spec.spammer);
    emit(Archetype::Inverted, spec.inverted);
    return records;
}

} // namespace crowdex

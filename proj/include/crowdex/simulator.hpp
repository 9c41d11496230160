#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "crowdex/campaign.hpp"

namespace crowdex {

// Deterministic random source with identical output on every platform.
// mt19937_64 is bit-exact by standard; the derived draws below avoid
// std::uniform_int_distribution and std::normal_distribution, whose
// algorithms legitimately differ between standard libraries.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    // Unbiased integer in [lo, hi], rejection sampling on the raw engine.
    int uniformInt(int lo, int hi);

    // Standard normal via the Box-Muller transform; consumes two draws.
    double standardNormal();

private:
    double unitInterval(); // (0, 1] with 53-bit resolution

    std::mt19937_64 engine_;
};

// Synthetic population: how many participants of each archetype answer the
// campaign, and with how much noise.
//
//   perfect   rates every gold item at its expected note
//   noisy     adds rounded gaussian noise (noise_sigma) to the expected note
//   spammer   rates everything uniformly at random
//   inverted  mirrors the expected note across the scale
//
// Test conditions have no expected note; non-spammers aim at a per-condition
// target mean (configured or defaulted to a ramp across the scale) with
// their own noise model.
struct PopulationSpec {
    int perfect = 0;
    int noisy = 0;
    int spammer = 0;
    int inverted = 0;
    double noise_sigma = 1.0;
    std::uint64_t seed = 0;
    std::map<std::string, double> test_condition_means;

    // Accepts {"perfect": n, "noisy": n, "spammer": n, "inverted": n,
    // "noise_sigma": s, "seed": u, "test_condition_means": {id: mean}}.
    // Counts default to 0 and must not all be 0; unknown keys are rejected
    // so typos cannot silently drop a group. Throws InvalidSpec.
    static PopulationSpec fromJson(const std::string& json_text);
};

// Target mean of the index-th of `count` test conditions when the spec does
// not pin one: a ramp from half a notch above the bottom of the scale to
// half a notch below the top (the scale midpoint for a single condition).
double defaultTestMean(std::size_t index, std::size_t count);

// One full pass of every synthetic participant over one hit each, records in
// deterministic order: archetypes as listed above, participants numbered
// within each archetype, conditions in the campaign's canonical order.
// Panels and hits cycle through panel_1..panel_4 / hit_1..hit_4.
std::vector<ResponseRecord> generatePopulation(const PopulationSpec& spec,
                                               const CampaignConfig& config);

} // namespace crowdex

#include <cmath>
#include <vector>

#include "doctest.h"

#include "crowdex/expertise.hpp"
#include "oracle.hpp"

using namespace crowdex;

namespace {

const GoldSheet kReference = GoldSheet::fromValues({1, 2, 3, 4, 5});

std::vector<int> sheetFromIndex(int index) {
    std::vector<int> notes(5);
    for (int i = 0; i < 5; ++i) {
        notes[std::size_t(i)] = index % 5 + 1;
        index /= 5;
    }
    return notes;
}

oracle::Crit toOracle(Criterion k) {
    switch (k) {
        case Criterion::Exactness: return oracle::Crit::Exactness;
        case Criterion::Confusion: return oracle::Crit::Confusion;
        case Criterion::PredOrder: return oracle::Crit::PredOrder;
        case Criterion::SuccOrder: return oracle::Crit::SuccOrder;
    }
    throw std::logic_error("bad criterion");
}

double sparseAt(const oracle::SparseMass& m, std::uint32_t s) {
    const auto it = m.find(s);
    return it == m.end() ? 0.0 : it->second;
}

} // namespace

TEST_CASE("criterion masses for the worked response (2,1,2,4,5)") {
    const auto resp = GoldSheet::fromValues({2, 1, 2, 4, 5});
    const PreferenceGraph ref_g(kReference);
    const PreferenceGraph resp_g(resp);

    // Item-level spot checks.
    CHECK(criterionExactness(ref_g, resp_g, 1).at(kExpert) == doctest::Approx(0.75));
    CHECK(criterionExactness(ref_g, resp_g, 4).at(kExpert) == doctest::Approx(1.0));
    CHECK(criterionConfusion(ref_g, resp_g, 1).at(kExpert) == doctest::Approx(0.5));
    CHECK(criterionConfusion(ref_g, resp_g, 2).at(kExpert) == doctest::Approx(1.0));

    const auto pred1 = criterionPredOrder(ref_g, resp_g, 1);
    CHECK(pred1.at(kExpert) == doctest::Approx(0.5));
    CHECK(pred1.at(kNonExpert) == doctest::Approx(0.0));
    CHECK(pred1.at(kEitherExpertise) == doctest::Approx(0.5));

    const auto succ1 = criterionSuccOrder(ref_g, resp_g, 1);
    CHECK(succ1.at(kExpert) == doctest::Approx(0.0));
    CHECK(succ1.at(kNonExpert) == doctest::Approx(1.0));

    // Graph-level masses, pinned to 1e-9.
    const auto exact = graphCriterionMass(ref_g, resp_g, Criterion::Exactness);
    CHECK(exact.at(kExpert) == doctest::Approx(0.875).epsilon(1e-9));
    CHECK(exact.at(kNonExpert) == doctest::Approx(0.125).epsilon(1e-9));

    const auto conf = graphCriterionMass(ref_g, resp_g, Criterion::Confusion);
    CHECK(conf.at(kExpert) == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
    CHECK(conf.at(kNonExpert) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));

    const auto pred = graphCriterionMass(ref_g, resp_g, Criterion::PredOrder);
    CHECK(pred.at(kExpert) == doctest::Approx(3.25 / 6.0).epsilon(1e-9));
    CHECK(pred.at(kNonExpert) == doctest::Approx(0.25 / 6.0).epsilon(1e-9));
    CHECK(pred.at(kEitherExpertise) == doctest::Approx(2.5 / 6.0).epsilon(1e-9));

    const auto succ = graphCriterionMass(ref_g, resp_g, Criterion::SuccOrder);
    CHECK(succ.at(kExpert) == doctest::Approx(3.5 / 6.0).epsilon(1e-9));
    CHECK(succ.at(kNonExpert) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(succ.at(kEitherExpertise) == doctest::Approx(1.5 / 6.0).epsilon(1e-9));
}

TEST_CASE("identity response: graph masses and their fixed points") {
    const PreferenceGraph ref_g(kReference);
    const auto exact = graphCriterionMass(ref_g, ref_g, Criterion::Exactness);
    CHECK(exact.at(kExpert) == doctest::Approx(1.0).epsilon(1e-12));

    const auto conf = graphCriterionMass(ref_g, ref_g, Criterion::Confusion);
    CHECK(conf.at(kExpert) == doctest::Approx(1.0).epsilon(1e-12));

    // The extreme items carry no order evidence on one side even when the
    // response is perfect: the top item has no predecessors in either graph,
    // the bottom item no successors. Those node masses are vacuous, so the
    // graph averages keep mass on the whole frame.
    const auto pred = graphCriterionMass(ref_g, ref_g, Criterion::PredOrder);
    CHECK(pred.at(kExpert) == doctest::Approx(4.0 / 6.0).epsilon(1e-9));
    CHECK(pred.at(kNonExpert) == doctest::Approx(0.0));
    CHECK(pred.at(kEitherExpertise) == doctest::Approx(2.0 / 6.0).epsilon(1e-9));

    const auto succ = graphCriterionMass(ref_g, ref_g, Criterion::SuccOrder);
    CHECK(succ.at(kExpert) == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
    CHECK(succ.at(kNonExpert) == doctest::Approx(0.0));
    CHECK(succ.at(kEitherExpertise) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("start node policy") {
    const PreferenceGraph ref_g(kReference);
    const PreferenceGraph resp_g(GoldSheet::fromValues({5, 4, 3, 2, 1}));

    for (const auto* g : {&resp_g, &ref_g}) {
        CHECK(startNodeMass(Criterion::Exactness, ref_g, *g).at(kExpert) == 1.0);
        CHECK(startNodeMass(Criterion::Confusion, ref_g, *g).at(kExpert) == 1.0);
        CHECK(startNodeMass(Criterion::PredOrder, ref_g, *g).at(kEitherExpertise) == 1.0);
        CHECK(startNodeMass(Criterion::SuccOrder, ref_g, *g).at(kExpert) == 1.0);
    }
}

TEST_CASE("degrees of the extreme sheets") {
    const auto perfect = computeExpertiseBreakdown(kReference, kReference);
    CHECK(perfect.degree == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.fused.at(kExpert) == doctest::Approx(1.0).epsilon(1e-12));

    // Full inversion fuses to mostly conflict; the degree has a closed form.
    const auto inverted = computeExpertiseBreakdown(kReference, GoldSheet::fromValues({5, 4, 3, 2, 1}));
    CHECK(inverted.fused.conflict() == doctest::Approx(17.0 / 18.0).epsilon(1e-9));
    CHECK(inverted.fused.at(kExpert) == doctest::Approx(1.0 / 18.0).epsilon(1e-9));
    CHECK(inverted.fused.unnormalizedConflict());
    CHECK(inverted.degree == doctest::Approx(1.0 / 18.0).epsilon(1e-9));

    CHECK_THROWS_AS(computeExpertiseBreakdown(kReference, GoldSheet::fromValues({1, 2, 3})), Error);
}

TEST_CASE("every sheet matches the oracle pipeline end to end") {
    const std::vector<int> ref_notes = kReference.values();
    double best = -1.0;
    int best_index = -1;
    for (int index = 0; index < 3125; ++index) {
        const std::vector<int> notes = sheetFromIndex(index);
        const auto breakdown = computeExpertiseBreakdown(kReference, GoldSheet::fromValues(notes));

        for (Criterion k : kAllCriteria) {
            const auto want = oracle::graphMass(toOracle(k), ref_notes, notes);
            const auto& got = breakdown.graph_mass.at(k);
            for (Subset s = 0; s < 4; ++s) {
                CHECK(std::abs(got.at(s) - sparseAt(want, s)) <= 1e-12);
            }
            // Node masses: start node plus one per item.
            REQUIRE(breakdown.per_node.at(k).size() == 6);
            const auto want_start = oracle::startNode(toOracle(k), ref_notes, notes);
            for (Subset s = 0; s < 4; ++s) {
                CHECK(std::abs(breakdown.per_node.at(k)[0].at(s) - sparseAt(want_start, s)) <= 1e-12);
            }
        }

        CHECK(breakdown.degree == doctest::Approx(oracle::degree(ref_notes, notes)).epsilon(1e-12));
        CHECK(breakdown.degree > 0.0);
        CHECK(breakdown.degree <= 1.0 + 1e-12);

        if (breakdown.degree > best) {
            best = breakdown.degree;
            best_index = index;
        }
    }
    // The identity sheet (1,2,3,4,5) is the unique maximizer.
    CHECK(sheetFromIndex(best_index) == ref_notes);
    CHECK(best == doctest::Approx(1.0).epsilon(1e-12));
}

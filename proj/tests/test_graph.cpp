#include <set>
#include <vector>

#include "doctest.h"

#include "crowdex/preference_graph.hpp"
#include "oracle.hpp"

using namespace crowdex;

namespace {

// All 5^5 sheets over five items, decoded from a base-5 index.
std::vector<int> sheetFromIndex(int index) {
    std::vector<int> notes(5);
    for (int i = 0; i < 5; ++i) {
        notes[std::size_t(i)] = index % 5 + 1;
        index /= 5;
    }
    return notes;
}

} // namespace

TEST_CASE("rating and sheet validation") {
    CHECK_THROWS_AS(Rating(0), RatingOutOfRange);
    CHECK_THROWS_AS(Rating(6), RatingOutOfRange);
    CHECK(Rating(1).value() == 1);
    CHECK(Rating(5).value() == 5);

    CHECK_THROWS_AS(GoldSheet({}), Error);
    CHECK_THROWS_AS(GoldSheet::fromValues({1, 2, 7}), RatingOutOfRange);

    const auto sheet = GoldSheet::fromValues({2, 1, 2, 4, 5});
    CHECK(sheet.itemCount() == 5);
    CHECK(sheet.note(1) == 2);
    CHECK(sheet.note(5) == 5);
    CHECK_THROWS_AS(sheet.note(0), UnknownItem);
    CHECK_THROWS_AS(sheet.note(6), UnknownItem);
    CHECK(sheet.values() == std::vector<int>{2, 1, 2, 4, 5});
}

TEST_CASE("worked example: sheet (2,1,2,4,5)") {
    const auto g = buildPreferenceGraph(GoldSheet::fromValues({2, 1, 2, 4, 5}));

    REQUIRE(g.layers().size() == 4);
    CHECK(g.layers()[0].note == 5);
    CHECK(g.layers()[0].depth == 0);
    CHECK(g.layers()[0].items == std::vector<int>{5});
    CHECK(g.layers()[1].note == 4);
    CHECK(g.layers()[1].depth == 1);
    CHECK(g.layers()[2].note == 2);
    CHECK(g.layers()[2].depth == 3);
    CHECK(g.layers()[2].items == std::vector<int>{1, 3});
    CHECK(g.layers()[3].note == 1);
    CHECK(g.layers()[3].depth == 4);

    // One start arc, one between the top layers, then 1x2 and 2x1 bipartite.
    CHECK(g.arcs().size() == 6);
    for (const GraphArc& arc : g.arcs()) {
        CHECK(arc.cost == g.depth(arc.to) - g.depth(arc.from));
    }

    CHECK(g.depth(kStartNode) == 0);
    CHECK(g.depth(1) == 3);
    CHECK(g.depth(2) == 4);
    CHECK(g.depth(3) == 3);
    CHECK(g.depth(4) == 1);
    CHECK(g.depth(5) == 0);

    CHECK(g.ancestors(1) == std::set<int>{4, 5});
    CHECK(g.descendants(1) == std::set<int>{2});
    CHECK(g.levelSet(1) == std::set<int>{1, 3});
    CHECK(g.ancestors(5).empty());       // the start node is not an item
    CHECK(g.levelSet(5) == std::set<int>{5});
    CHECK(g.descendants(2).empty());
    CHECK(g.ancestors(2) == std::set<int>{1, 3, 4, 5});

    CHECK_THROWS_AS(g.depth(6), UnknownItem);
    CHECK_THROWS_AS(g.ancestors(0), UnknownItem);
    CHECK_THROWS_AS(g.descendants(-1), UnknownItem);
    CHECK_THROWS_AS(g.levelSet(6), UnknownItem);
}

TEST_CASE("strict chain and all-ties sheets") {
    const auto chain = buildPreferenceGraph(GoldSheet::fromValues({1, 2, 3, 4, 5}));
    CHECK(chain.layers().size() == 5);
    CHECK(chain.arcs().size() == 5);
    CHECK(chain.depth(1) == 4);
    CHECK(chain.depth(5) == 0);
    CHECK(chain.ancestors(3) == std::set<int>{4, 5});
    CHECK(chain.descendants(3) == std::set<int>{1, 2});
    CHECK(chain.levelSet(3) == std::set<int>{3});

    // Ties share a layer and get no arcs among themselves.
    const auto flat = buildPreferenceGraph(GoldSheet::fromValues({3, 3, 3, 3, 3}));
    CHECK(flat.layers().size() == 1);
    CHECK(flat.arcs().size() == 5);
    for (int item = 1; item <= 5; ++item) {
        CHECK(flat.depth(item) == 2);
        CHECK(flat.ancestors(item).empty());
        CHECK(flat.descendants(item).empty());
        CHECK(flat.levelSet(item) == std::set<int>{1, 2, 3, 4, 5});
    }
}

TEST_CASE("single-item sheet") {
    const auto g = buildPreferenceGraph(GoldSheet::fromValues({3}));
    CHECK(g.layers().size() == 1);
    CHECK(g.arcs().size() == 1);
    CHECK(g.depth(1) == 2);
    CHECK(g.ancestors(1).empty());
    CHECK(g.levelSet(1) == std::set<int>{1});
    CHECK(extractNotes(g) == GoldSheet::fromValues({3}));
}

TEST_CASE("every five-item sheet matches the note-comparison oracle") {
    for (int index = 0; index < 3125; ++index) {
        const std::vector<int> notes = sheetFromIndex(index);
        const auto sheet = GoldSheet::fromValues(notes);
        const auto g = buildPreferenceGraph(sheet);

        // Layer sanity: strictly increasing depth, notes strictly decreasing,
        // items partitioned.
        int covered = 0;
        for (std::size_t k = 0; k < g.layers().size(); ++k) {
            REQUIRE_FALSE(g.layers()[k].items.empty());
            covered += int(g.layers()[k].items.size());
            if (k > 0) {
                CHECK(g.layers()[k].depth > g.layers()[k - 1].depth);
                CHECK(g.layers()[k].note < g.layers()[k - 1].note);
            }
        }
        CHECK(covered == 5);

        for (const GraphArc& arc : g.arcs()) {
            CHECK(arc.cost >= 0);
            CHECK(arc.cost == g.depth(arc.to) - g.depth(arc.from));
        }

        for (int item = 1; item <= 5; ++item) {
            CHECK(g.depth(item) == oracle::depth(notes, item));
            CHECK(g.ancestors(item) == oracle::ancestors(notes, item));
            CHECK(g.descendants(item) == oracle::descendants(notes, item));
            CHECK(g.levelSet(item) == oracle::levelSet(notes, item));
        }

        CHECK(extractNotes(g) == sheet);
    }
}

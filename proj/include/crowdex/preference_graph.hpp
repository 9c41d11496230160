#pragma once

#include <set>
#include <vector>

#include "crowdex/errors.hpp"

namespace crowdex {

// Rating scale bounds. Everything downstream derives from these two numbers:
// node depths, arc costs, the exactness denominator, and how many anchor
// conditions a campaign needs.
inline constexpr int kRatingMin = 1;
inline constexpr int kRatingMax = 5;

// Largest possible depth, and the largest possible depth difference between
// two nodes of a preference graph.
inline constexpr int kDepthSpan = kRatingMax - kRatingMin;

// A rating on the scale; construction rejects values outside it.
class Rating {
public:
    explicit Rating(int value);
    int value() const { return value_; }

    friend bool operator==(Rating a, Rating b) = default;

private:
    int value_;
};

// One participant's ratings of the anchor items. Item ids are 1-based;
// item i's note lives at index i-1.
class GoldSheet {
public:
    explicit GoldSheet(std::vector<Rating> notes);
    static GoldSheet fromValues(const std::vector<int>& values);

    int itemCount() const { return static_cast<int>(notes_.size()); }
    int note(int item) const;
    const std::vector<Rating>& notes() const { return notes_; }
    std::vector<int> values() const;

    friend bool operator==(const GoldSheet& a, const GoldSheet& b) = default;

private:
    std::vector<Rating> notes_;
};

// Node ids inside a graph: kStartNode for the virtual start, items keep
// their 1-based ids.
inline constexpr int kStartNode = 0;

struct GraphArc {
    int from; // kStartNode or item id
    int to;   // item id
    int cost; // note difference along the arc, >= 0
};

// One layer of equally-rated items.
struct GraphLayer {
    int note;               // shared note of the layer's items
    int depth;              // distance from the start node, accumulated arc costs
    std::vector<int> items; // ascending item ids
};

// Layered order graph of one rating sheet. The virtual start node sits above
// the best-rated layer; each layer is fully connected to the next; arc costs
// are note differences, so a node's depth recovers its note.
class PreferenceGraph {
public:
    explicit PreferenceGraph(const GoldSheet& sheet);

    int itemCount() const { return item_count_; }
    const std::vector<GraphLayer>& layers() const { return layers_; }
    const std::vector<GraphArc>& arcs() const { return arcs_; }

    // Accumulated arc cost from the start node; 0 for kStartNode itself.
    int depth(int node) const;

    // Strict upstream closure of an item: every item from which it is
    // reachable. The virtual start node is never reported.
    std::set<int> ancestors(int item) const;

    // Strict downstream closure of an item.
    std::set<int> descendants(int item) const;

    // Items sharing the item's depth, the item included. The virtual start
    // node is never reported, even when the top layer sits at depth zero.
    std::set<int> levelSet(int item) const;

private:
    void requireItem(int item) const;

    int item_count_;
    std::vector<GraphLayer> layers_;
    std::vector<GraphArc> arcs_;
    std::vector<int> depth_by_item_;       // index item-1
    std::vector<int> layer_index_by_item_; // index item-1
};

PreferenceGraph buildPreferenceGraph(const GoldSheet& sheet);

// Inverse of buildPreferenceGraph: reads each item's note back off its depth.
GoldSheet extractNotes(const PreferenceGraph& graph);

} // namespace crowdex

#include "crowdex/preference_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace crowdex {

Rating::Rating(int value) : value_(value) {
    if (value < kRatingMin || value > kRatingMax) {
        throw RatingOutOfRange("rating " + std::to_string(value) + " outside " +
                               std::to_string(kRatingMin) + ".." + std::to_string(kRatingMax));
    }
}

GoldSheet::GoldSheet(std::vector<Rating> notes) : notes_(std::move(notes)) {
    if (notes_.empty()) {
        throw Error("a rating sheet needs at least one item");
    }
}

GoldSheet GoldSheet::fromValues(const std::vector<int>& values) {
    std::vector<Rating> notes;
    notes.reserve(values.size());
    for (int v : values) {
        notes.emplace_back(v);
    }
    return GoldSheet(std::move(notes));
}

int GoldSheet::note(int item) const {
    if (item < 1 || item > itemCount()) {
        throw UnknownItem("item " + std::to_string(item) + " not on the sheet");
    }
    return notes_[std::size_t(item) - 1].value();
}

std::vector<int> GoldSheet::values() const {
    std::vector<int> out;
    out.reserve(notes_.size());
    for (Rating r : notes_) {
        out.push_back(r.value());
    }
    return out;
}

PreferenceGraph::PreferenceGraph(const GoldSheet& sheet) : item_count_(sheet.itemCount()) {
    // Layers: equal notes share a layer, better notes sit higher.
    std::map<int, std::vector<int>, std::greater<>> by_note;
    for (int item = 1; item <= item_count_; ++item) {
        by_note[sheet.note(item)].push_back(item);
    }
    for (const auto& [note, items] : by_note) {
        layers_.push_back(GraphLayer{note, 0, items});
    }

    // Arcs carry the note difference: start node over the best layer, then
    // each layer fully connected to the next. Depths accumulate arc costs,
    // so an item's depth ends up at kRatingMax minus its note.
    const int top_cost = kRatingMax - layers_.front().note;
    for (int item : layers_.front().items) {
        arcs_.push_back(GraphArc{kStartNode, item, top_cost});
    }
    layers_.front().depth = top_cost;
    for (std::size_t k = 1; k < layers_.size(); ++k) {
        const int cost = layers_[k - 1].note - layers_[k].note;
        for (int from : layers_[k - 1].items) {
            for (int to : layers_[k].items) {
                arcs_.push_back(GraphArc{from, to, cost});
            }
        }
        layers_[k].depth = layers_[k - 1].depth + cost;
    }

    depth_by_item_.assign(std::size_t(item_count_), 0);
    layer_index_by_item_.assign(std::size_t(item_count_), 0);
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        for (int item : layers_[k].items) {
            depth_by_item_[std::size_t(item) - 1] = layers_[k].depth;
            layer_index_by_item_[std::size_t(item) - 1] = int(k);
        }
    }
}

void PreferenceGraph::requireItem(int item) const {
    if (item < 1 || item > item_count_) {
        throw UnknownItem("item " + std::to_string(item) + " not in the graph");
    }
}

int PreferenceGraph::depth(int node) const {
    if (node == kStartNode) {
        return 0;
    }
    requireItem(node);
    return depth_by_item_[std::size_t(node) - 1];
}

std::set<int> PreferenceGraph::ancestors(int item) const {
    requireItem(item);
    // Upstream reachability over the arcs; the start node is dropped.
    std::set<int> out;
    std::queue<int> frontier;
    frontier.push(item);
    std::set<int> seen{item};
    while (!frontier.empty()) {
        const int node = frontier.front();
        frontier.pop();
        for (const GraphArc& arc : arcs_) {
            if (arc.to == node && !seen.count(arc.from)) {
                seen.insert(arc.from);
                frontier.push(arc.from);
                if (arc.from != kStartNode) {
                    out.insert(arc.from);
                }
            }
        }
    }
    return out;
}

std::set<int> PreferenceGraph::descendants(int item) const {
    requireItem(item);
    std::set<int> out;
    std::queue<int> frontier;
    frontier.push(item);
    std::set<int> seen{item};
    while (!frontier.empty()) {
        const int node = frontier.front();
        frontier.pop();
        for (const GraphArc& arc : arcs_) {
            if (arc.from == node && !seen.count(arc.to)) {
                seen.insert(arc.to);
                frontier.push(arc.to);
                out.insert(arc.to);
            }
        }
    }
    return out;
}

std::set<int> PreferenceGraph::levelSet(int item) const {
    requireItem(item);
    const auto& layer = layers_[std::size_t(layer_index_by_item_[std::size_t(item) - 1])];
    return std::set<int>(layer.items.begin(), layer.items.end());
}

PreferenceGraph buildPreferenceGraph(const GoldSheet& sheet) { return PreferenceGraph(sheet); }

GoldSheet extractNotes(const PreferenceGraph& graph) {
    std::vector<Rating> notes;
    notes.reserve(std::size_t(graph.itemCount()));
    for (int item = 1; item <= graph.itemCount(); ++item) {
        notes.emplace_back(kRatingMax - graph.depth(item));
    }
    return GoldSheet(std::move(notes));
}

} // namespace crowdex

#include "crowdex/serialize.hpp"

#include <cmath>

namespace crowdex {

double roundForArtifact(double value) { return std::round(value * 1e6) / 1e6; }

nlohmann::json toJson(const MassFunction& m) {
    nlohmann::json out = nlohmann::json::object();
    for (Subset s : m.focalElements()) {
        out[m.frame().subsetLabel(s)] = roundForArtifact(m.at(s));
    }
    return out;
}

namespace {

std::string nodeName(int node) {
    return node == kStartNode ? std::string("start") : std::to_string(node);
}

} // namespace

nlohmann::json toJson(const PreferenceGraph& g) {
    nlohmann::json out;
    auto nodes = nlohmann::json::array();
    nodes.push_back(nodeName(kStartNode));
    for (int item = 1; item <= g.itemCount(); ++item) {
        nodes.push_back(nodeName(item));
    }
    out["nodes"] = std::move(nodes);

    auto layers = nlohmann::json::array();
    for (const GraphLayer& layer : g.layers()) {
        layers.push_back({{"depth", layer.depth}, {"note", layer.note}, {"items", layer.items}});
    }
    out["layers"] = std::move(layers);

    auto arcs = nlohmann::json::array();
    for (const GraphArc& arc : g.arcs()) {
        arcs.push_back(
            {{"from", nodeName(arc.from)}, {"to", nodeName(arc.to)}, {"cost", arc.cost}});
    }
    out["arcs"] = std::move(arcs);
    return out;
}

nlohmann::json toJson(const ExpertiseBreakdown& b) {
    nlohmann::json out;
    out["degree"] = roundForArtifact(b.degree);
    nlohmann::json criteria = nlohmann::json::object();
    for (Criterion k : kAllCriteria) {
        nlohmann::json entry;
        nlohmann::json per_node = nlohmann::json::object();
        const auto& nodes = b.per_node.at(k);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            per_node[nodeName(int(i))] = toJson(nodes[i]);
        }
        entry["per_node"] = std::move(per_node);
        entry["graph"] = toJson(b.graph_mass.at(k));
        criteria[criterionName(k)] = std::move(entry);
    }
    out["criteria"] = std::move(criteria);
    out["fused"] = toJson(b.fused);
    return out;
}

namespace {

nlohmann::json conditionsToJson(const std::vector<ConditionMean>& conditions) {
    auto out = nlohmann::json::array();
    for (const ConditionMean& c : conditions) {
        nlohmann::json entry;
        entry["id"] = c.condition_id;
        entry["kind"] = c.kind == ConditionKind::Gold ? "gold" : "test";
        entry["count"] = c.count;
        entry["mean"] = c.mean ? nlohmann::json(roundForArtifact(*c.mean)) : nlohmann::json();
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

nlohmann::json aggregateToJson(double threshold, const ScoreTable& table,
                               std::size_t retained_count,
                               const std::vector<ConditionMean>& conditions) {
    nlohmann::json out;
    out["threshold"] = roundForArtifact(threshold);
    out["scored_hits"] = table.rows.size();
    out["unscorable_hits"] = table.unscorable_count;
    out["retained_hits"] = retained_count;
    out["conditions"] = conditionsToJson(conditions);
    return out;
}

nlohmann::json reportDatasetToJson(const std::string& label, const ScoreTable& table,
                                   std::size_t retained_count,
                                   const std::vector<ConditionMean>& conditions,
                                   const Histogram& histogram) {
    nlohmann::json out;
    out["label"] = label;
    out["scored_hits"] = table.rows.size();
    out["unscorable_hits"] = table.unscorable_count;
    out["retained_hits"] = retained_count;
    if (table.rows.empty()) {
        out["mean_degree"] = nullptr;
    } else {
        double sum = 0.0;
        for (const ScoreRow& row : table.rows) {
            sum += row.degree;
        }
        out["mean_degree"] = roundForArtifact(sum / double(table.rows.size()));
    }
    out["histogram"] = {{"bin_width", Histogram::kBinWidth}, {"counts", histogram.counts}};
    out["conditions"] = conditionsToJson(conditions);
    return out;
}

std::string dumpJson(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

} // namespace crowdex

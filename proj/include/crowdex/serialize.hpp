#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crowdex/campaign.hpp"

namespace crowdex {

// JSON views of the core types. Keys are sorted (nlohmann objects are
// ordered maps) and doubles are rounded to six decimals before insertion,
// so repeated runs dump byte-identical documents.

// {"subset label": mass, ...}, nonzero focal elements only; the empty set
// appears under "".
nlohmann::json toJson(const MassFunction& m);

// {"nodes": [...], "layers": [{"depth", "note", "items"}], "arcs": [...]}.
// The virtual start node is named "start"; items keep their numeric ids.
nlohmann::json toJson(const PreferenceGraph& g);

// {"degree", "criteria": {name: {"per_node", "graph"}}, "fused"}.
nlohmann::json toJson(const ExpertiseBreakdown& b);

// Aggregation artifact: threshold, hit counts, and per-condition means in
// canonical order ("mean": null where nothing was retained).
nlohmann::json aggregateToJson(double threshold, const ScoreTable& table,
                               std::size_t retained_count,
                               const std::vector<ConditionMean>& conditions);

// One dataset's slice of a report: counts, mean degree, histogram, and the
// per-condition aggregation.
nlohmann::json reportDatasetToJson(const std::string& label, const ScoreTable& table,
                                   std::size_t retained_count,
                                   const std::vector<ConditionMean>& conditions,
                                   const Histogram& histogram);

// Serialize with a trailing newline, 2-space indent.
std::string dumpJson(const nlohmann::json& doc);

// Six-decimal rounding applied to every double that enters an artifact.
double roundForArtifact(double value);

} // namespace crowdex

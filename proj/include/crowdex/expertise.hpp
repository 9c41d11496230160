#pragma once

#include <array>
#include <map>
#include <vector>

#include "crowdex/mass_function.hpp"
#include "crowdex/preference_graph.hpp"

namespace crowdex {

// Frame shared by all expertise judgments: expert / non-expert.
const Frame& expertFrame();

inline constexpr Subset kExpert = 1;
inline constexpr Subset kNonExpert = 2;
inline constexpr Subset kEitherExpertise = 3;

// The four per-node judgments a response graph is scored on.
enum class Criterion { Exactness, Confusion, PredOrder, SuccOrder };

inline constexpr std::array<Criterion, 4> kAllCriteria{
    Criterion::Exactness, Criterion::Confusion, Criterion::PredOrder, Criterion::SuccOrder};

// Stable lower-case name, used as a JSON key.
const char* criterionName(Criterion k);

// Per-item judgments. `ref` is the graph of the expected notes, `resp` the
// participant's. Both graphs must cover the same items.
//
// Exactness: how far the item's depth moved, linear on the depth span.
MassFunction criterionExactness(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item);

// Confusion: overlap of the item's level sets (Jaccard). Both sets contain
// the item, so with n items the expert mass never drops below 1/n.
MassFunction criterionConfusion(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item);

// Order preservation upstream: confirmed predecessors count toward E,
// predecessors that should be successors toward NE, the rest stays on the
// whole frame. Empty sets on both sides mean no evidence: vacuous.
MassFunction criterionPredOrder(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item);

// Order preservation downstream, mirror of criterionPredOrder.
MassFunction criterionSuccOrder(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item);

MassFunction itemCriterionMass(Criterion k, const PreferenceGraph& ref,
                               const PreferenceGraph& resp, int item);

// Contribution of the virtual start node to a criterion's graph average.
// The start node is identical in every graph, so exactness and confusion
// grant it full expert mass, the predecessor view carries no evidence, and
// the successor view compares all items against all items. Kept in one
// place: this is a policy choice, not a derived fact.
MassFunction startNodeMass(Criterion k, const PreferenceGraph& ref, const PreferenceGraph& resp);

// Component-wise mean of the criterion's masses over all nodes, the start
// node included.
MassFunction graphCriterionMass(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                Criterion k);

// Full scoring of one response sheet against the reference sheet.
struct ExpertiseBreakdown {
    // Node masses per criterion: index 0 is the start node, item i at index i.
    std::map<Criterion, std::vector<MassFunction>> per_node;
    std::map<Criterion, MassFunction> graph_mass;
    MassFunction fused; // conjunctive combination of the four graph masses
    double degree;      // 1 - distance(fused, categorical expert)
};

ExpertiseBreakdown computeExpertiseBreakdown(const GoldSheet& ref, const GoldSheet& resp);

// Just the degree, in [0, 1].
double expertiseDegree(const GoldSheet& ref, const GoldSheet& resp);

} // namespace crowdex

#include "crowdex/expertise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crowdex {

const Frame& expertFrame() {
    static const Frame frame({"E", "NE"});
    return frame;
}

const char* criterionName(Criterion k) {
    switch (k) {
        case Criterion::Exactness: return "exactness";
        case Criterion::Confusion: return "confusion";
        case Criterion::PredOrder: return "pred_order";
        case Criterion::SuccOrder: return "succ_order";
    }
    throw Error("unknown criterion");
}

namespace {

// Zero denominators mean no evidence, not an error.
double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : double(num) / double(den);
}

// Split between expert and non-expert only.
MassFunction binaryMass(double e) {
    return MassFunction::fromAssignments(expertFrame(), {{kExpert, e}, {kNonExpert, 1.0 - e}});
}

// Expert / non-expert / undecided split; the remainder stays on the frame.
MassFunction ternaryMass(double e, double ne) {
    const double rest = std::max(0.0, 1.0 - e - ne);
    return MassFunction::fromAssignments(
        expertFrame(), {{kExpert, e}, {kNonExpert, ne}, {kEitherExpertise, rest}});
}

std::size_t intersectionSize(const std::set<int>& a, const std::set<int>& b) {
    std::size_t n = 0;
    for (int x : a) {
        n += b.count(x);
    }
    return n;
}

std::size_t unionSize(const std::set<int>& a, const std::set<int>& b) {
    return a.size() + b.size() - intersectionSize(a, b);
}

// Common shape of the two order criteria. `ref_same` and `resp_same` hold the
// reference's and the participant's items on one side of the judged node
// (both predecessors or both successors); `ref_opposite` holds the
// reference's other side. Members of resp_same confirmed by ref_same count
// toward E over the union; members contradicted by ref_opposite count toward
// NE over the participant's set; the rest is undecided.
MassFunction orderMass(const std::set<int>& ref_same, const std::set<int>& ref_opposite,
                       const std::set<int>& resp_same) {
    const std::size_t confirmed = intersectionSize(resp_same, ref_same);
    const std::size_t contradicted = intersectionSize(resp_same, ref_opposite);
    const double e = ratio(confirmed, unionSize(ref_same, resp_same));
    const double ne = ratio(contradicted, resp_same.size());
    return ternaryMass(e, ne);
}

void requireSameItems(const PreferenceGraph& ref, const PreferenceGraph& resp) {
    if (ref.itemCount() != resp.itemCount()) {
        throw Error("reference and response sheets cover different items");
    }
}

} // namespace

MassFunction criterionExactness(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item) {
    requireSameItems(ref, resp);
    const int moved = std::abs(ref.depth(item) - resp.depth(item));
    return binaryMass(1.0 - double(moved) / double(kDepthSpan));
}

MassFunction criterionConfusion(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item) {
    requireSameItems(ref, resp);
    const auto a = ref.levelSet(item);
    const auto b = resp.levelSet(item);
    // The item belongs to both sets, so the union is never empty.
    return binaryMass(ratio(intersectionSize(a, b), unionSize(a, b)));
}

MassFunction criterionPredOrder(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item) {
    requireSameItems(ref, resp);
    return orderMass(ref.ancestors(item), ref.descendants(item), resp.ancestors(item));
}

MassFunction criterionSuccOrder(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                int item) {
    requireSameItems(ref, resp);
    return orderMass(ref.descendants(item), ref.ancestors(item), resp.descendants(item));
}

MassFunction itemCriterionMass(Criterion k, const PreferenceGraph& ref,
                               const PreferenceGraph& resp, int item) {
    switch (k) {
        case Criterion::Exactness: return criterionExactness(ref, resp, item);
        case Criterion::Confusion: return criterionConfusion(ref, resp, item);
        case Criterion::PredOrder: return criterionPredOrder(ref, resp, item);
        case Criterion::SuccOrder: return criterionSuccOrder(ref, resp, item);
    }
    throw Error("unknown criterion");
}

MassFunction startNodeMass(Criterion k, const PreferenceGraph& ref, const PreferenceGraph& resp) {
    requireSameItems(ref, resp);
    switch (k) {
        case Criterion::Exactness:
        case Criterion::Confusion:
            return MassFunction::categorical(expertFrame(), kExpert);
        case Criterion::PredOrder:
            return MassFunction::vacuous(expertFrame());
        case Criterion::SuccOrder: {
            std::set<int> everything;
            for (int item = 1; item <= ref.itemCount(); ++item) {
                everything.insert(item);
            }
            return orderMass(everything, {}, everything);
        }
    }
    throw Error("unknown criterion");
}

MassFunction graphCriterionMass(const PreferenceGraph& ref, const PreferenceGraph& resp,
                                Criterion k) {
    MassFunction::Vector sum = startNodeMass(k, ref, resp).masses();
    for (int item = 1; item <= ref.itemCount(); ++item) {
        sum += itemCriterionMass(k, ref, resp, item).masses();
    }
    sum /= double(ref.itemCount() + 1);
    return MassFunction::fromVector(expertFrame(), std::move(sum), false);
}

ExpertiseBreakdown computeExpertiseBreakdown(const GoldSheet& ref, const GoldSheet& resp) {
    if (ref.itemCount() != resp.itemCount()) {
        throw Error("reference and response sheets cover different items");
    }
    const PreferenceGraph ref_graph(ref);
    const PreferenceGraph resp_graph(resp);

    std::map<Criterion, std::vector<MassFunction>> per_node;
    std::map<Criterion, MassFunction> graph_mass;
    std::vector<MassFunction> to_fuse;
    for (Criterion k : kAllCriteria) {
        std::vector<MassFunction> nodes;
        nodes.reserve(std::size_t(ref.itemCount()) + 1);
        nodes.push_back(startNodeMass(k, ref_graph, resp_graph));
        for (int item = 1; item <= ref.itemCount(); ++item) {
            nodes.push_back(itemCriterionMass(k, ref_graph, resp_graph, item));
        }
        per_node.emplace(k, std::move(nodes));
        const MassFunction g = graphCriterionMass(ref_graph, resp_graph, k);
        graph_mass.emplace(k, g);
        to_fuse.push_back(g);
    }

    MassFunction fused = combineAll(to_fuse);
    const double degree = 1.0 - jousselmeDistance(fused, MassFunction::categorical(expertFrame(), kExpert));
    return ExpertiseBreakdown{std::move(per_node), std::move(graph_mass), std::move(fused), degree};
}

double expertiseDegree(const GoldSheet& ref, const GoldSheet& resp) {
    return computeExpertiseBreakdown(ref, resp).degree;
}

} // namespace crowdex

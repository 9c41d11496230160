#pragma once

#include <bit>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "crowdex/errors.hpp"
#include "crowdex/frame.hpp"

namespace crowdex {

// Mass assignments must sum to one within this tolerance. They are accepted
// or rejected as given, never renormalized.
inline constexpr double kMassTolerance = 1e-9;

// Basic belief assignment over a frame: one mass per subset, stored densely
// and indexed by subset bitmask. Construction rejects mass on the empty set;
// only conjunctive combination can produce it, and such a result carries the
// unnormalizedConflict flag.
template <typename Scalar = double>
class MassFunctionT {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    // Builds from explicit subset assignments; subsets not listed get zero
    // mass. Throws ForeignSubset, NegativeMass, EmptySetMass, or SumNotOne.
    static MassFunctionT fromAssignments(const Frame& frame,
                                         const std::map<Subset, Scalar>& assignments) {
        Vector masses = Vector::Zero(static_cast<Eigen::Index>(frame.subsetCount()));
        for (const auto& [subset, mass] : assignments) {
            if (!frame.contains(subset)) {
                throw ForeignSubset("mass assigned outside the frame's subsets");
            }
            masses[static_cast<Eigen::Index>(subset)] = mass;
        }
        return fromVector(frame, std::move(masses), false);
    }

    // All mass on one non-empty subset of the frame.
    static MassFunctionT categorical(const Frame& frame, Subset focal) {
        if (focal == kEmptySet) {
            throw EmptySubset("categorical mass needs a non-empty subset");
        }
        return fromAssignments(frame, {{focal, Scalar{1}}});
    }

    // Total ignorance: all mass on the full frame.
    static MassFunctionT vacuous(const Frame& frame) {
        return fromAssignments(frame, {{frame.full(), Scalar{1}}});
    }

    // Builds from a dense vector indexed by subset bitmask. Only combination
    // results may put mass on the empty set (allow_empty_set_mass).
    static MassFunctionT fromVector(const Frame& frame, Vector masses,
                                    bool allow_empty_set_mass) {
        if (masses.size() != static_cast<Eigen::Index>(frame.subsetCount())) {
            throw ForeignSubset("mass vector size does not match the frame");
        }
        Scalar total{0};
        for (Eigen::Index i = 0; i < masses.size(); ++i) {
            if (masses[i] < Scalar{0}) {
                throw NegativeMass("negative mass on a subset");
            }
            total += masses[i];
        }
        using std::abs;
        if (abs(total - Scalar{1}) > Scalar{kMassTolerance}) {
            throw SumNotOne("masses sum to a value other than one");
        }
        const bool on_empty = masses[kEmptySet] > Scalar{0};
        if (on_empty && !allow_empty_set_mass) {
            throw EmptySetMass("mass on the empty set is only valid as a combination result");
        }
        return MassFunctionT(frame, std::move(masses), on_empty);
    }

    const Frame& frame() const { return frame_; }
    const Vector& masses() const { return masses_; }

    // Mass of one subset; throws ForeignSubset on stray bits.
    Scalar at(Subset s) const {
        if (!frame_.contains(s)) {
            throw ForeignSubset("subset has bits outside the frame");
        }
        return masses_[static_cast<Eigen::Index>(s)];
    }

    // Mass currently sitting on the empty set.
    Scalar conflict() const { return masses_[kEmptySet]; }

    // True when this value came out of a combination that left conflict mass
    // on the empty set.
    bool unnormalizedConflict() const { return unnormalized_conflict_; }

    // Subsets with nonzero mass, ascending by bitmask.
    std::vector<Subset> focalElements() const {
        std::vector<Subset> focal;
        for (Eigen::Index i = 0; i < masses_.size(); ++i) {
            if (masses_[i] != Scalar{0}) {
                focal.push_back(static_cast<Subset>(i));
            }
        }
        return focal;
    }

private:
    MassFunctionT(Frame frame, Vector masses, bool unnormalized_conflict)
        : frame_(std::move(frame)),
          masses_(std::move(masses)),
          unnormalized_conflict_(unnormalized_conflict) {}

    Frame frame_;
    Vector masses_;
    bool unnormalized_conflict_;
};

using MassFunction = MassFunctionT<double>;

// Conjunctive combination: mass products accumulate on subset intersections.
// Conflict stays on the empty set; nothing is renormalized.
template <typename Scalar>
MassFunctionT<Scalar> combineConjunctive(const MassFunctionT<Scalar>& a,
                                         const MassFunctionT<Scalar>& b) {
    if (!(a.frame() == b.frame())) {
        throw FrameMismatch("combining masses over different frames");
    }
    using Vector = typename MassFunctionT<Scalar>::Vector;
    const Vector& ma = a.masses();
    const Vector& mb = b.masses();
    Vector out = Vector::Zero(ma.size());
    for (Eigen::Index i = 0; i < ma.size(); ++i) {
        if (ma[i] == Scalar{0}) {
            continue;
        }
        for (Eigen::Index j = 0; j < mb.size(); ++j) {
            if (mb[j] == Scalar{0}) {
                continue;
            }
            out[i & j] += ma[i] * mb[j];
        }
    }
    return MassFunctionT<Scalar>::fromVector(a.frame(), std::move(out), true);
}

// Left fold of combineConjunctive over the list; throws EmptyList when there
// is nothing to combine. The operation is commutative and associative, so the
// fold order is only an implementation detail.
template <typename Scalar>
MassFunctionT<Scalar> combineAll(const std::vector<MassFunctionT<Scalar>>& masses) {
    if (masses.empty()) {
        throw EmptyList("no mass functions to combine");
    }
    MassFunctionT<Scalar> acc = masses.front();
    for (std::size_t i = 1; i < masses.size(); ++i) {
        acc = combineConjunctive(acc, masses[i]);
    }
    return acc;
}

// Subset similarity matrix used by jousselmeDistance: Jaccard index of the
// subsets, with the empty set similar only to itself.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> similarityMatrix(const Frame& frame) {
    const auto n = static_cast<Eigen::Index>(frame.subsetCount());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sim(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto x = static_cast<Subset>(i);
            const auto y = static_cast<Subset>(j);
            if (x == kEmptySet && y == kEmptySet) {
                sim(i, j) = Scalar{1};
            } else if (x == kEmptySet || y == kEmptySet) {
                sim(i, j) = Scalar{0};
            } else {
                sim(i, j) = Scalar(std::popcount(x & y)) / Scalar(std::popcount(x | y));
            }
        }
    }
    return sim;
}

// Similarity-weighted quadratic distance between two mass vectors,
// sqrt(0.5 * d^T * S * d). A genuine metric on mass functions: zero exactly
// on equal inputs, symmetric, and obeying the triangle inequality.
template <typename Scalar>
Scalar jousselmeDistance(const MassFunctionT<Scalar>& a, const MassFunctionT<Scalar>& b) {
    if (!(a.frame() == b.frame())) {
        throw FrameMismatch("distance between masses over different frames");
    }
    using Vector = typename MassFunctionT<Scalar>::Vector;
    const Vector diff = a.masses() - b.masses();
    const auto sim = similarityMatrix<Scalar>(a.frame());
    Scalar quad = Scalar{0.5} * diff.dot(sim * diff);
    if (quad < Scalar{0}) {
        quad = Scalar{0}; // rounding guard: the form is positive semidefinite
    }
    using std::sqrt;
    return sqrt(quad);
}

} // namespace crowdex

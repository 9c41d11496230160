#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crowdex/errors.hpp"

namespace crowdex {

// A subset of a frame's elements, encoded as a bitmask over the frame's
// element order: bit i set means element i belongs to the subset.
using Subset = std::uint32_t;

inline constexpr Subset kEmptySet = 0;

// Frames are kept small so dense 2^n storage stays cheap.
inline constexpr std::size_t kMaxFrameElements = 10;

// Frame of discernment: an ordered set of distinct hypothesis labels.
class Frame {
public:
    // Throws Error unless there is at least one label, at most
    // kMaxFrameElements, and all labels are distinct and non-empty.
    explicit Frame(std::vector<std::string> elements);

    std::size_t size() const { return elements_.size(); }
    std::size_t subsetCount() const { return std::size_t{1} << elements_.size(); }

    // Bitmask with every element set.
    Subset full() const { return static_cast<Subset>(subsetCount() - 1); }

    const std::string& element(std::size_t i) const { return elements_[i]; }
    const std::vector<std::string>& elements() const { return elements_; }

    bool contains(Subset s) const { return (s & ~full()) == 0; }

    // Bitmask for a list of element labels; unknown labels throw ForeignSubset.
    Subset subsetOf(const std::vector<std::string>& labels) const;

    // Comma-joined labels of a subset's elements, in frame order.
    // The empty subset maps to "". Throws ForeignSubset on stray bits.
    std::string subsetLabel(Subset s) const;

    friend bool operator==(const Frame& a, const Frame& b) = default;

private:
    std::vector<std::string> elements_;
};

} // namespace crowdex

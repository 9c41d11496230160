#include "crowdex/frame.hpp"

#include <algorithm>
#include <set>

namespace crowdex {

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error("frame needs at least one element");
    }
    if (elements_.size() > kMaxFrameElements) {
        throw Error("frame exceeds " + std::to_string(kMaxFrameElements) + " elements");
    }
    std::set<std::string> seen;
    for (const auto& label : elements_) {
        if (label.empty()) {
            throw Error("frame element label is empty");
        }
        if (!seen.insert(label).second) {
            throw Error("duplicate frame element: " + label);
        }
    }
}

Subset Frame::subsetOf(const std::vector<std::string>& labels) const {
    Subset s = kEmptySet;
    for (const auto& label : labels) {
        auto it = std::find(elements_.begin(), elements_.end(), label);
        if (it == elements_.end()) {
            throw ForeignSubset("label outside frame: " + label);
        }
        s |= Subset{1} << (it - elements_.begin());
    }
    return s;
}

std::string Frame::subsetLabel(Subset s) const {
    if (!contains(s)) {
        throw ForeignSubset("subset has bits outside the frame");
    }
    std::string out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (s & (Subset{1} << i)) {
            if (!out.empty()) {
                out += ',';
            }
            out += elements_[i];
        }
    }
    return out;
}

} // namespace crowdex

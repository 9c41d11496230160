#pragma once

#include <string>
#include <vector>

#include "crowdex/campaign.hpp"

namespace crowdex {

// Chart rendering, hand-emitted SVG. Output is standalone (no scripts, no
// external references) with fixed two-decimal coordinates, so identical
// inputs produce identical bytes.

// Ten-bar degree histogram over [0, 1]. An empty histogram renders a valid
// chart with zero-height bars.
std::string renderHistogramSvg(const Histogram& histogram, const std::string& title);

struct CurveSeries {
    std::string label;
    std::vector<ConditionMean> points; // canonical condition order
};

// Mean rating per condition, one line per series. Conditions with no
// retained ratings break the line instead of plotting 0.
std::string renderConditionCurvesSvg(const std::vector<CurveSeries>& series,
                                     const std::string& title);

} // namespace crowdex

#pragma once

#include <string>

#include "childci/growth.hpp"

namespace childci {

// Static line chart: educational level on x, Q on y, one polyline per
// percentile curve. When a trajectory is given its points are overlaid as
// band-colored markers labeled by acquisition. Output is byte-stable for
// identical inputs.
std::string chart_svg(const GrowthChart& chart, const Trajectory* trajectory = nullptr);

}  // namespace childci

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dcalc::cli {

using Series = std::vector<std::pair<double, double>>;

// Two polylines on a fixed 800x500 canvas with linear axes. Points with a
// non-finite value are dropped; y values are clipped to [y_min, y_max] when
// those are finite.
std::string comparison_svg(const Series& discrete, const Series& classical, const std::string& title, double y_min,
                           double y_max);

}  // namespace dcalc::cli

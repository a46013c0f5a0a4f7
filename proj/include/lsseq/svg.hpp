#pragma once

#include <string>

#include "lsseq/point_set.hpp"

namespace lsseq {

// Standalone SVG scatter plot: fixed viewBox 0 0 1000 1000, origin at the
// bottom-left (y axis flipped), one filled circle of radius 1.2 units per
// point, the generator label as <title>. Byte output is deterministic for
// fixed input.
std::string scatter_svg(const PointSet2D& pts);

}  // namespace lsseq

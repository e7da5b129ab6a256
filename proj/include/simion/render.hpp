#pragma once

#include <string>
#include <vector>

#include "simion/path.hpp"
#include "simion/shape.hpp"

namespace simion {

struct RenderSpec {
  Shape shape;
  std::vector<Path> paths;   // one or two
  std::vector<Point> marks;  // each must lie on one of the paths
  int scale = 40;            // pixels per grid unit
};

// SVG 1.1 document: row 0 at the top, shape cells shaded in the northwest
// corner, one polyline per path and one circle per mark. Throws
// std::invalid_argument when the spec breaks the constraints above.
std::string render_svg(const RenderSpec& spec);

}  // namespace simion

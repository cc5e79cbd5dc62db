#pragma once

// Minimal SVG rendering of a polygon with its erosion level sets. The level
// sets make integrator mistakes visible at a glance.

#include <string>

#include "avgdist/geometry.hpp"

namespace avgdist {

// Boundary polyline plus `n_levels` eroded bodies at equally spaced offsets.
// The viewBox pads the shape's bounding box by 5 percent.
std::string shape_svg(const ConvexPolygon& poly, int n_levels = 5);

void write_shape_svg(const std::string& path, const ConvexPolygon& poly, int n_levels = 5);

}  // namespace avgdist

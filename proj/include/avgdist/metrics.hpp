#pragma once

// Shape metrics used as convergence diagnostics: symmetric-difference area
// and boundary Hausdorff distance.

#include "avgdist/geometry.hpp"

namespace avgdist {

struct ShapeMetricReport {
  double sym_diff_area = 0.0;
  double hausdorff = 0.0;
};

// Area of P with the other polygon clipped away; empty intersections give 0.
double intersection_area(const ConvexPolygon& p, const ConvexPolygon& q);

// H2(P) + H2(Q) - 2 H2(P n Q). Exactly symmetric: the clip order is fixed
// by a canonical ordering of the pair.
double sym_diff_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Hausdorff distance between the boundary curves. Exact for convex polygon
// pairs: candidates are vertices plus the interior maxima of the concave
// per-edge distance profile (see docs/math.md).
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

ShapeMetricReport shape_metrics(const ConvexPolygon& p, const ConvexPolygon& q);

// Distance from a point to the boundary curve of a polygon (point may be
// inside or outside).
double distance_to_boundary_curve(Vec2 x, const ConvexPolygon& poly);

}  // namespace avgdist

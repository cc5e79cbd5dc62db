#pragma once

// Inner parallel bodies of convex polygons. Offsetting every edge inward at
// unit speed keeps the area piecewise quadratic in the offset t; the pieces
// change when an edge shrinks to zero length. See docs/math.md for the
// derivation of A(t) = A - P t + t^2 * sum cot(theta_i / 2).

#include <optional>
#include <vector>

#include "avgdist/geometry.hpp"

namespace avgdist {

struct ErosionPiece {
  double t_begin = 0.0;
  double t_end = 0.0;
  // Global coefficients: A(t) = a + b*t + c*t^2 on [t_begin, t_end).
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

class ErosionProfile {
 public:
  ErosionProfile(std::vector<ErosionPiece> pieces, double inradius)
      : pieces_(std::move(pieces)), inradius_(inradius) {}

  const std::vector<ErosionPiece>& pieces() const { return pieces_; }
  double inradius() const { return inradius_; }

  // Area of the eroded body; 0 for t >= inradius.
  double area_at(double t) const;

  // t_0 = 0 < t_1 < ... < t_K = inradius.
  std::vector<double> breakpoints() const;

 private:
  std::vector<ErosionPiece> pieces_;
  double inradius_ = 0.0;
};

ErosionProfile erosion_profile(const ConvexPolygon& poly);

// The inner parallel body at offset t; nullopt once the body is empty or
// degenerate (t >= inradius up to floating-point slack).
std::optional<ConvexPolygon> erode(const ConvexPolygon& poly, double t);

}  // namespace avgdist

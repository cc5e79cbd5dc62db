#pragma once

// The penalized average-distance energy over convex polygons:
//   E(P) = int_P dist^p(x, boundary) dx + lambda * H1(boundary)^alpha / H2(P)^beta.
// The integral term is evaluated exactly through the erosion profile
// (layer-cake formula); a Monte Carlo estimator serves as an independent
// oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "avgdist/erosion.hpp"
#include "avgdist/geometry.hpp"

namespace avgdist {

struct NonpositiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnergyParams {
  double p = 1.0;
  double lambda = 1.0;
  double alpha = 1.0;
  double beta = 1.0;

  bool generalized() const { return alpha != 1.0 || beta != 1.0; }
};

// Hard violations: p < 1 or lambda <= 0. Empty means valid.
std::vector<std::string> param_errors(const EnergyParams& params);

// Generalized exponents outside the window 2*beta > alpha > p*beta/(p+1) > 0.
// Warnings only; evaluation still works, but optimal rescaling does not.
std::vector<std::string> exponent_window_warnings(const EnergyParams& params);

struct EnergyBreakdown {
  double avg_dist = 0.0;   // F = int dist^p
  double area = 0.0;       // H2
  double perimeter = 0.0;  // H1
  double ratio_term = 0.0; // lambda * H1^alpha / H2^beta
  double total = 0.0;      // avg_dist + ratio_term
};

// Exact layer-cake evaluation: p * int_0^r t^(p-1) A(t) dt with A the
// erosion-profile quadratic on each piece; closed form for any real p >= 1.
double avg_dist_integral(const ConvexPolygon& poly, double p);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Rejection sampling from the bounding box; deterministic per seed.
McEstimate avg_dist_mc(const ConvexPolygon& poly, double p, std::int64_t n_samples,
                       std::uint64_t seed);

EnergyBreakdown energy(const ConvexPolygon& poly, const EnergyParams& params);

// Closed forms for the disk of radius r (alpha = beta = 1 only).
EnergyBreakdown disk_energy(double p, double lambda, double r);

struct RescaleResult {
  double r_star = 1.0;
  double rescaled_total = 0.0;
};

// Minimizes r
//   -> r^(p+2) * F + lambda * ratio * r^(alpha - 2 beta)
// in closed form; `ratio` is H1^alpha / H2^beta of the unscaled shape.
// Requires the exponent window for generalized params (see docs/math.md).
RescaleResult optimal_scale(double avg_dist, double ratio, const EnergyParams& params);

}  // namespace avgdist

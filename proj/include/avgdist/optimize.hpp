#pragma once

// Energy minimization over support-function discretizations, plus the
// competitor moves (chord cuts, corner cuts) and boundary diagnostics.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "avgdist/energy.hpp"
#include "avgdist/geometry.hpp"

namespace avgdist {

struct EpsTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point on the boundary: edge index plus parameter in [0, 1] along it.
struct BoundaryPoint {
  int edge = 0;
  double s = 0.0;
};

Vec2 boundary_point(const ConvexPolygon& poly, BoundaryPoint bp);

// Cuts the polygon along the segment [w1, w2] and keeps the piece with the
// majority of the original vertices (ties: larger area, then the piece on
// the counterclockwise side of w1). Both endpoints on one edge make the cut
// a null operation and return the input unchanged.
ConvexPolygon chord_cut(const ConvexPolygon& poly, BoundaryPoint w1, BoundaryPoint w2);

// Chord cut with endpoints at arc-length eps from the vertex along both
// adjacent edges. For a polygon corner with interior angle alpha the
// perimeter drops by exactly 2*eps*(1 - sin(alpha/2)) and the area by
// eps^2*sin(alpha)/2. Throws EpsTooLarge when eps reaches half of either
// adjacent edge.
ConvexPolygon corner_cut(const ConvexPolygon& poly, int vertex_index, double eps);

// Interior angle at a vertex, in (0, pi).
double interior_angle(const ConvexPolygon& poly, int vertex_index);

// Support values at n uniform angles 2*pi*i/n.
struct SupportVector {
  int n = 0;
  std::vector<double> h;
};

SupportVector support_vector_of(const ConvexPolygon& poly, int n);
ConvexPolygon polygon_from(const SupportVector& sv);

// Replaces h by the support values of the induced polygon, which removes
// redundant half-planes. Idempotent. Throws EmptyOrUnbounded.
SupportVector project_to_feasible(const SupportVector& sv);

// |g(t+2h) - 2 g(t) + g(t-2h)| / h^2 for the arc-length parameterization g
// of the boundary. Approaches 4/R on a circle of radius R (see docs/math.md).
double second_difference_quotient(const ConvexPolygon& poly, double t, double h_arc);

// Max of the quotient over a fixed uniform arc-length grid.
double curvature_diagnostic(const ConvexPolygon& poly, double h_arc);

enum class StartShape { RegularPolygon, Random, File };

struct OptimizationConfig {
  EnergyParams params;
  int n = 64;              // number of support angles
  int max_iters = 500;
  double step_init = 0.05; // relative coordinate step
  double step_min = 1e-6;
  std::uint64_t seed = 1;
  StartShape start = StartShape::RegularPolygon;
  std::optional<ConvexPolygon> start_shape;  // required for StartShape::File
  bool symmetrize = false;  // fold h to mirror symmetry about the x-axis
};

std::vector<std::string> config_errors(const OptimizationConfig& config);

struct TraceRow {
  int iteration = 0;
  double total = 0.0;
  double step = 0.0;
};

struct OptimizationResult {
  ConvexPolygon shape;
  EnergyBreakdown energy;
  std::vector<TraceRow> trace;
  double residual_stationarity = 0.0;
  double residual_theorem3 = 0.0;
  double isoperimetric_deficit = 0.0;
};

// Pattern search over support values with the homothety direction factored
// out in closed form each evaluation; the recorded totals are the optimally
// rescaled energies and are non-increasing by construction.
OptimizationResult minimize(const OptimizationConfig& config);

// One greedy first-improvement sweep over the coordinates of h with the
// given relative step. `evaluate` returns the objective or nullopt for an
// infeasible candidate. Returns true when some coordinate improved; h and
// score are updated in place. Shared by minimize and the constant search.
bool coordinate_sweep(SupportVector& h, double step,
                      const std::function<std::optional<double>(const SupportVector&)>& evaluate,
                      double& score);

}  // namespace avgdist

#pragma once

// Executable checks for the quantitative identities and bounds satisfied by
// the energy, plus a numerical search for the sharpest constant in the
// integral-vs-ratio inequality.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "avgdist/energy.hpp"
#include "avgdist/geometry.hpp"
#include "avgdist/optimize.hpp"

namespace avgdist {

struct CheckReport {
  std::string name;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string details;
};

// F >= C * H2^(p+1) / H1^p with C = 3^-p * 2^(-p-4).
// margin is G - C where G = F * H1^p / H2^(p+1).
CheckReport check_claim1(const ConvexPolygon& poly, double p);

// H2 >= 4*pi*lambda^2 / E^2 (alpha = beta = 1 only).
CheckReport check_area_bound(const ConvexPolygon& poly, const EnergyParams& params);

// Stationarity and ratio identities of an optimization result, both at 1e-3.
CheckReport check_optimality_identities(const OptimizationResult& result,
                                        const EnergyParams& params);

// Fits the ratio-term decrease of corner cuts against the predicted slope
// 2*lambda*(1 - sin(alpha/2)) / H2 over the given eps ladder; passes within
// 5 percent.
CheckReport corner_rate_experiment(const ConvexPolygon& poly, int vertex_index,
                                   const EnergyParams& params,
                                   const std::vector<double>& eps_ladder);

// Dimensionless invariant G = F * H1^p / H2^(p+1).
double claim1_ratio(const ConvexPolygon& poly, double p);

inline double claim1_paper_bound(double p) {
  return std::pow(3.0, -p) * std::pow(2.0, -p - 4.0);
}

// Value of G for the disk (and for every tangential polygon).
inline double claim1_disk_value(double p) {
  return std::pow(2.0, p + 1.0) / ((p + 1.0) * (p + 2.0));
}

struct ConstantSearchResult {
  double p = 1.0;
  double best_value = 0.0;
  ConvexPolygon best_shape;
  double disk_value = 0.0;
  double paper_bound = 0.0;
};

// Minimum of G over a random corpus, regular polygons and (optionally) a
// local support-value search; throws if the minimum ever undercuts the
// proven lower bound, which would indicate an evaluation bug.
ConstantSearchResult search_constant(double p, int corpus_size, std::uint64_t seed, bool refine);

// Deterministic corpus shape for (seed, index); prefix-stable in the index.
ConvexPolygon corpus_polygon(std::uint64_t seed, int index);

struct SweepRow {
  int shape_index = 0;
  int n_vertices = 0;
  double p = 0.0;
  double lambda = 0.0;
  std::string check;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct SuiteConfig {
  int corpus_size = 200;
  std::uint64_t seed = 1;
  std::vector<double> p_list{1.0, 2.0, 3.0};
  std::vector<double> lambda_list{0.1, 1.0, 10.0};
  bool inject_failure = false;  // self-test of the failure path
};

struct SuiteReport {
  std::vector<CheckReport> checks;  // named fixture checks
  std::vector<SweepRow> sweep;      // corpus sweep, one row per shape x params
  int failures = 0;
};

// Fixture checks (closed-form shapes) plus the corpus inequality sweep.
SuiteReport run_verification_suite(const SuiteConfig& config);

}  // namespace avgdist

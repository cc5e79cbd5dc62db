#include "avgdist/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "avgdist/rng.hpp"

namespace avgdist {

std::vector<std::string> param_errors(const EnergyParams& params) {
  std::vector<std::string> errs;
  if (!(params.p >= 1.0)) {
    std::ostringstream os;
    os << "p must be >= 1 (got " << params.p << ")";
    errs.push_back(os.str());
  }
  if (!(params.lambda > 0.0)) {
    std::ostringstream os;
    os << "lambda must be > 0 (got " << params.lambda << ")";
    errs.push_back(os.str());
  }
  return errs;
}

std::vector<std::string> exponent_window_warnings(const EnergyParams& params) {
  std::vector<std::string> warns;
  if (!params.generalized()) return warns;
  const double lo = params.p * params.beta / (params.p + 1.0);
  if (!(params.beta > 0.0) || !(params.alpha > 0.0))
    warns.push_back("generalized exponents must be positive");
  if (!(2.0 * params.beta > params.alpha))
    warns.push_back("alpha >= 2*beta: minimizers degenerate to points");
  if (!(params.alpha > lo))
    warns.push_back("alpha <= p*beta/(p+1): perimeter control is lost");
  return warns;
}

double avg_dist_integral(const ConvexPolygon& poly, double p) {
  if (!(p >= 1.0)) throw InvalidParams("p must be >= 1");
  const ErosionProfile prof = erosion_profile(poly);
  // p * int t^(p-1) (a + b t + c t^2) dt
  //   = a t^p + b p/(p+1) t^(p+1) + c p/(p+2) t^(p+2).
  auto antiderivative = [p](const ErosionPiece& pc, double t) {
    return pc.a * std::pow(t, p) + pc.b * p / (p + 1.0) * std::pow(t, p + 1.0) +
           pc.c * p / (p + 2.0) * std::pow(t, p + 2.0);
  };
  double total = 0.0;
  for (const ErosionPiece& pc : prof.pieces())
    total += antiderivative(pc, pc.t_end) - antiderivative(pc, pc.t_begin);
  return total;
}

McEstimate avg_dist_mc(const ConvexPolygon& poly, double p, std::int64_t n_samples,
                       std::uint64_t seed) {
  if (!(p >= 1.0)) throw InvalidParams("p must be >= 1");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  const auto& verts = poly.vertices();
  double xmin = verts[0].x, xmax = verts[0].x, ymin = verts[0].y, ymax = verts[0].y;
  for (const Vec2& v : verts) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const Measures m = measures(poly);
  const std::vector<HalfPlane> planes = edge_halfplanes(poly);
  const double slack = -kEpsInside * m.diameter;

  Rng rng(mix_seed(seed, 0x6d63ULL));
  double sum = 0.0, sum_sq = 0.0;
  std::int64_t accepted = 0;
  for (std::int64_t k = 0; k < n_samples; ++k) {
    Vec2 x{rng.uniform(xmin, xmax), rng.uniform(ymin, ymax)};
    double inside = std::numeric_limits<double>::infinity();
    for (const HalfPlane& pl : planes) inside = std::min(inside, pl.offset - dot(pl.normal, x));
    if (inside < slack) continue;
    double f = std::pow(std::max(inside, 0.0), p);
    sum += f;
    sum_sq += f * f;
    ++accepted;
  }
  if (accepted == 0) {
    // No interior hits; report a trivially valid spread instead of NaN.
    return {0.0, m.area * std::pow(m.diameter, p)};
  }
  const double mean = sum / static_cast<double>(accepted);
  const double var = std::max(0.0, sum_sq / static_cast<double>(accepted) - mean * mean);
  return {m.area * mean, m.area * std::sqrt(var / static_cast<double>(accepted))};
}

EnergyBreakdown energy(const ConvexPolygon& poly, const EnergyParams& params) {
  auto errs = param_errors(params);
  if (!errs.empty()) throw InvalidParams(errs.front());
  const Measures m = measures(poly);
  EnergyBreakdown bd;
  bd.avg_dist = avg_dist_integral(poly, params.p);
  bd.area = m.area;
  bd.perimeter = m.perimeter;
  bd.ratio_term =
      params.lambda * std::pow(m.perimeter, params.alpha) / std::pow(m.area, params.beta);
  bd.total = bd.avg_dist + bd.ratio_term;
  return bd;
}

EnergyBreakdown disk_energy(double p, double lambda, double r) {
  if (!(r > 0.0)) throw NonpositiveInput("disk radius must be positive");
  EnergyParams params{p, lambda};
  auto errs = param_errors(params);
  if (!errs.empty()) throw InvalidParams(errs.front());
  EnergyBreakdown bd;
  bd.avg_dist = 2.0 * std::numbers::pi * std::pow(r, p + 2.0) / ((p + 1.0) * (p + 2.0));
  bd.area = std::numbers::pi * r * r;
  bd.perimeter = 2.0 * std::numbers::pi * r;
  bd.ratio_term = 2.0 * lambda / r;
  bd.total = bd.avg_dist + bd.ratio_term;
  return bd;
}

RescaleResult optimal_scale(double avg_dist, double ratio, const EnergyParams& params) {
  auto errs = param_errors(params);
  if (!errs.empty()) throw InvalidParams(errs.front());
  if (!(avg_dist > 0.0) || !(ratio > 0.0))
    throw NonpositiveInput("optimal_scale needs positive integral and ratio");
  if (params.generalized() && !exponent_window_warnings(params).empty())
    throw InvalidParams("optimal rescaling requires 2*beta > alpha > p*beta/(p+1) > 0");
  // F scales as r^(p+2), the ratio term as r^(alpha-2beta) =: r^(-s).
  const double s = 2.0 * params.beta - params.alpha;
  const double q = params.p + 2.0 + s;
  RescaleResult res;
  res.r_star = std::pow(s * params.lambda * ratio / ((params.p + 2.0) * avg_dist), 1.0 / q);
  res.rescaled_total = std::pow(res.r_star, params.p + 2.0) * avg_dist +
                       params.lambda * ratio * std::pow(res.r_star, -s);
  return res;
}

}  // namespace avgdist

#include "avgdist/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace avgdist {

Vec2 boundary_point(const ConvexPolygon& poly, BoundaryPoint bp) {
  const auto& v = poly.vertices();
  const int n = static_cast<int>(v.size());
  if (bp.edge < 0 || bp.edge >= n) throw std::invalid_argument("edge index out of range");
  if (bp.s < 0.0 || bp.s > 1.0) throw std::invalid_argument("edge parameter outside [0,1]");
  Vec2 a = v[static_cast<std::size_t>(bp.edge)];
  Vec2 b = v[static_cast<std::size_t>((bp.edge + 1) % n)];
  return a + bp.s * (b - a);
}

ConvexPolygon chord_cut(const ConvexPolygon& poly, BoundaryPoint w1, BoundaryPoint w2) {
  const auto& v = poly.vertices();
  const int n = static_cast<int>(v.size());
  Vec2 p1 = boundary_point(poly, w1);
  Vec2 p2 = boundary_point(poly, w2);
  const double diam = measures(poly).diameter;
  if (w1.edge == w2.edge || distance(p1, p2) < kEpsMerge * diam) return poly;

  // Piece A walks counterclockwise from p1 to p2, piece B is the rest.
  auto collect = [&](Vec2 from, int from_edge, Vec2 to, int to_edge) {
    std::vector<Vec2> pts{from};
    for (int i = (from_edge + 1) % n;; i = (i + 1) % n) {
      pts.push_back(v[static_cast<std::size_t>(i)]);
      if (i == to_edge) break;
    }
    pts.push_back(to);
    return pts;
  };
  std::vector<Vec2> piece_a = collect(p1, w1.edge, p2, w2.edge);
  std::vector<Vec2> piece_b = collect(p2, w2.edge, p1, w1.edge);
  const std::size_t count_a = piece_a.size() - 2;  // original vertices retained
  const std::size_t count_b = piece_b.size() - 2;

  auto area_of = [](const std::vector<Vec2>& pts) {
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      twice += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * twice;
  };
  bool keep_a = count_a > count_b ||
                (count_a == count_b && area_of(piece_a) >= area_of(piece_b));
  return detail::from_ccw_chain(keep_a ? std::move(piece_a) : std::move(piece_b));
}

double interior_angle(const ConvexPolygon& poly, int vertex_index) {
  const auto& v = poly.vertices();
  const int n = static_cast<int>(v.size());
  if (vertex_index < 0 || vertex_index >= n) throw std::invalid_argument("vertex index out of range");
  Vec2 prev = v[static_cast<std::size_t>((vertex_index + n - 1) % n)];
  Vec2 here = v[static_cast<std::size_t>(vertex_index)];
  Vec2 next = v[static_cast<std::size_t>((vertex_index + 1) % n)];
  Vec2 in = here - prev, out = next - here;
  // Exterior turn in (0, pi); interior angle is its complement.
  double ext = std::atan2(cross(in, out), dot(in, out));
  return std::numbers::pi - ext;
}

ConvexPolygon corner_cut(const ConvexPolygon& poly, int vertex_index, double eps) {
  const auto& v = poly.vertices();
  const int n = static_cast<int>(v.size());
  if (vertex_index < 0 || vertex_index >= n) throw std::invalid_argument("vertex index out of range");
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  if (eps == 0.0) return poly;
  const int prev_edge = (vertex_index + n - 1) % n;
  const int next_edge = vertex_index;
  const double len_prev = distance(v[static_cast<std::size_t>(prev_edge)],
                                   v[static_cast<std::size_t>(vertex_index)]);
  const double len_next = distance(v[static_cast<std::size_t>(vertex_index)],
                                   v[static_cast<std::size_t>((vertex_index + 1) % n)]);
  if (eps >= 0.5 * std::min(len_prev, len_next))
    throw EpsTooLarge("eps must stay below half of both adjacent edges");
  BoundaryPoint w1{prev_edge, 1.0 - eps / len_prev};
  BoundaryPoint w2{next_edge, eps / len_next};
  return chord_cut(poly, w1, w2);
}

SupportVector support_vector_of(const ConvexPolygon& poly, int n) {
  if (n < 3) throw std::invalid_argument("need at least 3 support angles");
  return {n, sample_support(poly, n)};
}

ConvexPolygon polygon_from(const SupportVector& sv) {
  if (sv.n < 3 || sv.h.size() != static_cast<std::size_t>(sv.n))
    throw std::invalid_argument("malformed support vector");
  return from_support_samples(sv.h);
}

SupportVector project_to_feasible(const SupportVector& sv) {
  ConvexPolygon poly = polygon_from(sv);
  return {sv.n, sample_support(poly, sv.n)};
}

namespace {

// Arc-length point lookup on the boundary loop.
struct ArcWalker {
  std::vector<Vec2> verts;
  std::vector<double> cum;  // cum[i] = arc length up to vertex i
  double total = 0.0;

  explicit ArcWalker(const ConvexPolygon& poly) : verts(poly.vertices()) {
    cum.resize(verts.size() + 1, 0.0);
    for (std::size_t i = 0; i < verts.size(); ++i)
      cum[i + 1] = cum[i] + distance(verts[i], verts[(i + 1) % verts.size()]);
    total = cum.back();
  }

  Vec2 at(double t) const {
    t = std::fmod(t, total);
    if (t < 0.0) t += total;
    auto it = std::upper_bound(cum.begin(), cum.end(), t);
    std::size_t i = static_cast<std::size_t>(it - cum.begin()) - 1;
    if (i >= verts.size()) i = verts.size() - 1;
    Vec2 a = verts[i], b = verts[(i + 1) % verts.size()];
    double seg = cum[i + 1] - cum[i];
    double s = seg > 0.0 ? (t - cum[i]) / seg : 0.0;
    return a + s * (b - a);
  }
};

}  // namespace

double second_difference_quotient(const ConvexPolygon& poly, double t, double h_arc) {
  if (!(h_arc > 0.0)) throw std::invalid_argument("h_arc must be positive");
  ArcWalker walk(poly);
  Vec2 d = walk.at(t + 2.0 * h_arc) - 2.0 * walk.at(t) + walk.at(t - 2.0 * h_arc);
  return norm(d) / (h_arc * h_arc);
}

double curvature_diagnostic(const ConvexPolygon& poly, double h_arc) {
  const double perim = measures(poly).perimeter;
  if (!(h_arc > 0.0) || !(h_arc < perim / 8.0))
    throw std::invalid_argument("h_arc must lie in (0, perimeter/8)");
  ArcWalker walk(poly);
  constexpr int kGrid = 4096;
  double worst = 0.0;
  for (int k = 0; k < kGrid; ++k) {
    double t = perim * static_cast<double>(k) / kGrid;
    Vec2 d = walk.at(t + 2.0 * h_arc) - 2.0 * walk.at(t) + walk.at(t - 2.0 * h_arc);
    worst = std::max(worst, norm(d));
  }
  return worst / (h_arc * h_arc);
}

std::vector<std::string> config_errors(const OptimizationConfig& config) {
  std::vector<std::string> errs = param_errors(config.params);
  if (config.params.generalized())
    for (const std::string& w : exponent_window_warnings(config.params))
      errs.push_back("generalized exponents unusable for rescaling: " + w);
  if (config.n < 8) errs.push_back("need n >= 8 support angles");
  if (config.max_iters < 1) errs.push_back("need max_iters >= 1");
  if (!(config.step_min < config.step_init)) errs.push_back("need step_min < step_init");
  if (!(config.step_min > 0.0)) errs.push_back("need step_min > 0");
  if (config.start == StartShape::File && !config.start_shape)
    errs.push_back("file start requires a start shape");
  return errs;
}

bool coordinate_sweep(SupportVector& h, double step,
                      const std::function<std::optional<double>(const SupportVector&)>& evaluate,
                      double& score) {
  bool improved = false;
  for (int i = 0; i < h.n; ++i) {
    for (double sign : {+1.0, -1.0}) {
      SupportVector cand = h;
      cand.h[static_cast<std::size_t>(i)] *= 1.0 + sign * step;
      std::optional<double> val = evaluate(cand);
      if (val && *val < score) {
        h = std::move(cand);
        score = *val;
        improved = true;
        break;  // greedy: first improving direction, then next coordinate
      }
    }
  }
  return improved;
}

namespace {

SupportVector start_vector(const OptimizationConfig& config) {
  switch (config.start) {
    case StartShape::RegularPolygon:
      return {config.n, std::vector<double>(static_cast<std::size_t>(config.n), 1.0)};
    case StartShape::Random: {
      ConvexPolygon poly = random_convex_polygon(16, config.seed, 1.0);
      return support_vector_of(poly, config.n);
    }
    case StartShape::File:
      return support_vector_of(*config.start_shape, config.n);
  }
  throw std::logic_error("unreachable");
}

void fold_symmetric(SupportVector& sv) {
  for (int i = 1; i < sv.n - i; ++i) {
    double m = 0.5 * (sv.h[static_cast<std::size_t>(i)] + sv.h[static_cast<std::size_t>(sv.n - i)]);
    sv.h[static_cast<std::size_t>(i)] = m;
    sv.h[static_cast<std::size_t>(sv.n - i)] = m;
  }
}

struct Scored {
  EnergyBreakdown breakdown;
  RescaleResult rescale;
};

Scored score_shape(const ConvexPolygon& poly, const EnergyParams& params) {
  EnergyBreakdown bd = energy(poly, params);
  double ratio = bd.ratio_term / params.lambda;
  return {bd, optimal_scale(bd.avg_dist, ratio, params)};
}

}  // namespace

OptimizationResult minimize(const OptimizationConfig& config) {
  auto errs = config_errors(config);
  if (!errs.empty()) throw InvalidParams(errs.front());
  const EnergyParams& params = config.params;

  SupportVector h = project_to_feasible(start_vector(config));
  if (config.symmetrize) {
    fold_symmetric(h);
    h = project_to_feasible(h);
  }

  auto evaluate = [&](const SupportVector& cand) -> std::optional<double> {
    for (double hi : cand.h)
      if (!(hi > 1e-9) || !(hi < 1e6)) return std::nullopt;  // box guard
    try {
      SupportVector proj = project_to_feasible(cand);
      if (config.symmetrize) {
        fold_symmetric(proj);
        proj = project_to_feasible(proj);
      }
      return score_shape(polygon_from(proj), params).rescale.rescaled_total;
    } catch (const GeometryError&) {
      return std::nullopt;
    } catch (const NonpositiveInput&) {
      return std::nullopt;
    }
  };

  double step = config.step_init;
  double score = score_shape(polygon_from(h), params).rescale.rescaled_total;
  std::vector<TraceRow> trace;
  // The recorded totals are the optimally rescaled energies, which only
  // change through strictly improving accepted moves.
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    trace.push_back({iter, score, step});
    if (iter == config.max_iters) break;

    SupportVector h_proj = h;
    auto eval_and_assign = [&](const SupportVector& cand) { return evaluate(cand); };
    bool improved = coordinate_sweep(h_proj, step, eval_and_assign, score);
    if (improved) {
      h = project_to_feasible(h_proj);
      if (config.symmetrize) {
        fold_symmetric(h);
        h = project_to_feasible(h);
      }
    } else {
      step *= 0.5;
      if (step < config.step_min) break;
    }
  }

  // Final exact rescale so the stationarity identity holds on the result.
  Scored sc = score_shape(polygon_from(h), params);
  for (double& hi : h.h) hi *= sc.rescale.r_star;
  ConvexPolygon shape = polygon_from(h);
  EnergyBreakdown bd = energy(shape, params);

  OptimizationResult result{std::move(shape), bd, std::move(trace), 0.0, 0.0, 0.0};
  const double s = 2.0 * params.beta - params.alpha;
  const double lhs = (params.p + 2.0) * bd.avg_dist;
  result.residual_stationarity = std::abs(lhs - s * bd.ratio_term) / lhs;
  const double ratio = bd.perimeter / bd.area;
  result.residual_theorem3 =
      std::abs(ratio - (params.p + 2.0) / (params.lambda * (params.p + 3.0)) * bd.total) / ratio;
  result.isoperimetric_deficit =
      bd.perimeter * bd.perimeter / (4.0 * std::numbers::pi * bd.area) - 1.0;
  return result;
}

}  // namespace avgdist

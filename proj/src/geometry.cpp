#include "avgdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "avgdist/rng.hpp"

namespace avgdist {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

double distance(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 normalized(Vec2 a) {
  double n = norm(a);
  if (n <= 0.0) throw Degenerate("cannot normalize a zero vector");
  return {a.x / n, a.y / n};
}

Vec2 rotated(Vec2 a, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

namespace {

double max_pairwise_distance(const std::vector<Vec2>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

double signed_area(const std::vector<Vec2>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    twice += cross(pts[i], pts[(i + 1) % pts.size()]);
  return 0.5 * twice;
}

// Andrew's monotone chain; returns a strictly convex CCW hull.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull;
  hull.reserve(2 * pts.size());
  for (const Vec2& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 1] - hull[hull.size() - 2],
                 p - hull[hull.size() - 2]) <= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 1] - hull[hull.size() - 2],
                 *it - hull[hull.size() - 2]) <= 0.0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

}  // namespace

namespace detail {

ConvexPolygon from_ccw_chain(std::vector<Vec2> pts) {
  if (pts.size() < 3) throw Degenerate("fewer than 3 points");
  const double diam = max_pairwise_distance(pts);
  if (diam <= 0.0) throw Degenerate("all points coincide");
  const double merge_tol = kEpsMerge * diam;
  const double convex_tol = kEpsConvex * diam * diam;

  // Merge near-duplicate neighbours and elide collinear vertices until
  // stable. Cross products more negative than the tolerance mean a reflex
  // corner and are rejected rather than repaired.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      Vec2 a = pts[(i + pts.size() - 1) % pts.size()];
      Vec2 b = pts[i];
      Vec2 c = pts[(i + 1) % pts.size()];
      if (distance(b, c) < merge_tol) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>((i + 1) % pts.size()));
        changed = true;
        break;
      }
      double cr = cross(b - a, c - b);
      if (cr < -convex_tol) throw NotConvex("reflex corner");
      if (cr <= convex_tol) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) throw Degenerate("collapses to fewer than 3 vertices");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec2 a = pts[(i + pts.size() - 1) % pts.size()];
    Vec2 b = pts[i];
    Vec2 c = pts[(i + 1) % pts.size()];
    if (cross(b - a, c - b) <= convex_tol) throw NotConvex("cross product below tolerance");
    if (distance(a, b) < merge_tol) throw Degenerate("near-duplicate vertices");
  }
  if (signed_area(pts) <= 0.0) throw NotConvex("not counterclockwise");
  return ConvexPolygon(std::move(pts));
}

}  // namespace detail

ConvexPolygon make_polygon(const std::vector<Vec2>& points) {
  if (points.size() < 3) throw Degenerate("need at least 3 points");
  Vec2 mean{0.0, 0.0};
  for (const Vec2& p : points) mean = mean + p;
  mean = (1.0 / static_cast<double>(points.size())) * mean;

  std::vector<Vec2> pts = points;
  std::sort(pts.begin(), pts.end(), [mean](Vec2 a, Vec2 b) {
    double aa = std::atan2(a.y - mean.y, a.x - mean.x);
    double ab = std::atan2(b.y - mean.y, b.x - mean.x);
    if (aa != ab) return aa < ab;
    return dot(a - mean, a - mean) < dot(b - mean, b - mean);
  });
  return detail::from_ccw_chain(std::move(pts));
}

Measures measures(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  Measures m;
  double twice_area = 0.0;
  Vec2 cweight{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % n];
    double cr = cross(a, b);
    twice_area += cr;
    cweight = cweight + cr * (a + b);
    m.perimeter += distance(a, b);
  }
  m.area = 0.5 * twice_area;
  m.centroid = (1.0 / (3.0 * twice_area)) * cweight;
  m.diameter = max_pairwise_distance(v);
  return m;
}

std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  std::vector<HalfPlane> planes;
  planes.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 e = v[(i + 1) % v.size()] - v[i];
    Vec2 n = normalized(Vec2{e.y, -e.x});  // outward for CCW orientation
    planes.push_back({n, dot(n, v[i])});
  }
  return planes;
}

double boundary_distance(const ConvexPolygon& poly, Vec2 x) {
  double slack = std::numeric_limits<double>::infinity();
  for (const HalfPlane& pl : edge_halfplanes(poly))
    slack = std::min(slack, pl.offset - dot(pl.normal, x));
  double diam = measures(poly).diameter;
  if (slack < -kEpsInside * diam) throw OutsidePolygon("query point lies outside the polygon");
  return std::max(slack, 0.0);
}

bool contains(const ConvexPolygon& poly, Vec2 x) {
  double slack = std::numeric_limits<double>::infinity();
  for (const HalfPlane& pl : edge_halfplanes(poly))
    slack = std::min(slack, pl.offset - dot(pl.normal, x));
  return slack >= -kEpsInside * measures(poly).diameter;
}

double support_value(const ConvexPolygon& poly, Vec2 direction) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : poly.vertices()) best = std::max(best, dot(v, direction));
  return best;
}

std::vector<double> sample_support(const ConvexPolygon& poly, int n_angles) {
  std::vector<double> h(static_cast<std::size_t>(n_angles));
  for (int i = 0; i < n_angles; ++i) {
    double a = 2.0 * std::numbers::pi * i / n_angles;
    h[static_cast<std::size_t>(i)] = support_value(poly, {std::cos(a), std::sin(a)});
  }
  return h;
}

namespace {

Vec2 line_intersection(const HalfPlane& a, const HalfPlane& b) {
  double det = cross(a.normal, b.normal);
  return {(a.offset * b.normal.y - b.offset * a.normal.y) / det,
          (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

}  // namespace

ConvexPolygon halfplane_intersection(std::vector<HalfPlane> planes) {
  if (planes.size() < 3) throw EmptyOrUnbounded("fewer than three half-planes");
  for (HalfPlane& pl : planes) {
    double n = norm(pl.normal);
    if (n <= 0.0) throw std::invalid_argument("half-plane normal must be nonzero");
    pl.normal = (1.0 / n) * pl.normal;
    pl.offset /= n;
  }
  double scale = 1e-9;
  for (const HalfPlane& pl : planes) scale = std::max(scale, std::abs(pl.offset));
  const double eps = 1e-12 * scale;

  auto angle_of = [](const HalfPlane& pl) { return std::atan2(pl.normal.y, pl.normal.x); };
  std::sort(planes.begin(), planes.end(), [&](const HalfPlane& a, const HalfPlane& b) {
    double aa = angle_of(a), ab = angle_of(b);
    if (aa != ab) return aa < ab;
    return a.offset < b.offset;
  });
  // Same-direction duplicates: keep the most restrictive (sorted first).
  std::vector<HalfPlane> uniq;
  for (const HalfPlane& pl : planes) {
    if (!uniq.empty() && std::abs(cross(uniq.back().normal, pl.normal)) < 1e-12 &&
        dot(uniq.back().normal, pl.normal) > 0.0)
      continue;
    uniq.push_back(pl);
  }
  if (uniq.size() < 3) throw EmptyOrUnbounded("fewer than three distinct directions");

  // Bounded iff no open half-circle is free of normals: all angular gaps < pi.
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    double a0 = angle_of(uniq[i]);
    double a1 = angle_of(uniq[(i + 1) % uniq.size()]);
    double gap = a1 - a0;
    if (i + 1 == uniq.size()) gap += 2.0 * std::numbers::pi;
    if (gap >= std::numbers::pi - 1e-12) throw EmptyOrUnbounded("normals span less than a half turn");
  }

  auto violates = [eps](const HalfPlane& pl, Vec2 q) {
    return dot(pl.normal, q) > pl.offset + eps;
  };

  std::deque<HalfPlane> dq;
  std::deque<Vec2> pt;  // pt[i] = intersection of dq[i] and dq[i+1]
  for (const HalfPlane& pl : uniq) {
    while (dq.size() >= 2 && violates(pl, pt.back())) {
      dq.pop_back();
      pt.pop_back();
    }
    while (dq.size() >= 2 && violates(pl, pt.front())) {
      dq.pop_front();
      pt.pop_front();
    }
    if (!dq.empty()) pt.push_back(line_intersection(dq.back(), pl));
    dq.push_back(pl);
  }
  bool trimmed = true;
  while (trimmed && dq.size() > 2) {
    trimmed = false;
    if (violates(dq.front(), pt.back())) {
      dq.pop_back();
      pt.pop_back();
      trimmed = true;
    }
    if (dq.size() > 2 && violates(dq.back(), pt.front())) {
      dq.pop_front();
      pt.pop_front();
      trimmed = true;
    }
  }
  if (dq.size() < 3) throw EmptyOrUnbounded("empty interior");
  std::vector<Vec2> verts(pt.begin(), pt.end());
  verts.push_back(line_intersection(dq.back(), dq.front()));

  // The deque construction can leave an infeasible ring when the input is
  // contradictory; verify every vertex against every plane.
  for (const Vec2& q : verts)
    for (const HalfPlane& pl : uniq)
      if (dot(pl.normal, q) > pl.offset + 1e-9 * std::max(scale, norm(q)))
        throw EmptyOrUnbounded("no feasible interior");

  try {
    return detail::from_ccw_chain(std::move(verts));
  } catch (const GeometryError&) {
    throw EmptyOrUnbounded("degenerate intersection");
  }
}

ConvexPolygon from_support_samples(const std::vector<double>& h) {
  if (h.size() < 3) throw std::invalid_argument("need at least 3 support values");
  std::vector<HalfPlane> planes;
  planes.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(h.size());
    planes.push_back({{std::cos(a), std::sin(a)}, h[i]});
  }
  return halfplane_intersection(std::move(planes));
}

ConvexPolygon translated(const ConvexPolygon& poly, Vec2 t) {
  std::vector<Vec2> v = poly.vertices();
  for (Vec2& p : v) p = p + t;
  return detail::from_ccw_chain(std::move(v));
}

ConvexPolygon rotated(const ConvexPolygon& poly, double angle) {
  std::vector<Vec2> v = poly.vertices();
  for (Vec2& p : v) p = rotated(p, angle);
  return detail::from_ccw_chain(std::move(v));
}

ConvexPolygon scaled(const ConvexPolygon& poly, double factor) {
  if (factor <= 0.0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Vec2> v = poly.vertices();
  for (Vec2& p : v) p = factor * p;
  return detail::from_ccw_chain(std::move(v));
}

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, double scale) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  if (scale <= 0.0) throw std::invalid_argument("scale must be positive");
  Rng rng(mix_seed(seed, 0x706f6c79ULL));
  // Reject hulls thinner than roughly 100:1; see the corpus notes in README.
  const double min_area_ratio = 0.01;
  for (;;) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    while (pts.size() < static_cast<std::size_t>(n)) {
      Vec2 p{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
      if (p.x * p.x + p.y * p.y <= scale * scale) pts.push_back(p);
    }
    std::vector<Vec2> hull = convex_hull(std::move(pts));
    if (hull.size() < 3) continue;
    try {
      ConvexPolygon poly = make_polygon(hull);
      Measures m = measures(poly);
      if (m.area < min_area_ratio * m.diameter * m.diameter) continue;
      return poly;
    } catch (const GeometryError&) {
      continue;
    }
  }
}

}  // namespace avgdist

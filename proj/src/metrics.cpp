#include "avgdist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace avgdist {

namespace {

double polygon_area(const std::vector<Vec2>& pts) {
  if (pts.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    twice += cross(pts[i], pts[(i + 1) % pts.size()]);
  return 0.5 * twice;
}

// Sutherland-Hodgman against one half-plane, boundary-inclusive.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& subject, const HalfPlane& pl, double eps) {
  std::vector<Vec2> out;
  const std::size_t n = subject.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = subject[i], b = subject[(i + 1) % n];
    double da = pl.offset - dot(pl.normal, a);
    double db = pl.offset - dot(pl.normal, b);
    bool ina = da >= -eps, inb = db >= -eps;
    if (ina) out.push_back(a);
    if (ina != inb) {
      double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

bool lex_less(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x) return a[i].x < b[i].x;
    if (a[i].y != b[i].y) return a[i].y < b[i].y;
  }
  return false;
}

double point_segment_distance(Vec2 x, Vec2 a, Vec2 b) {
  Vec2 e = b - a;
  double len2 = dot(e, e);
  if (len2 <= 0.0) return distance(x, a);
  double t = std::clamp(dot(x - a, e) / len2, 0.0, 1.0);
  return distance(x, a + t * e);
}

// Directed sup over the boundary of `from` of the distance to the boundary
// of `to`. Vertices cover the convex (outside) part; for points interior to
// `to` the distance is a concave piecewise-linear function along each edge,
// whose maximum sits where two supporting-line distances cross.
double directed_boundary_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to) {
  double best = 0.0;
  for (const Vec2& v : from.vertices())
    best = std::max(best, distance_to_boundary_curve(v, to));

  const std::vector<HalfPlane> planes = edge_halfplanes(to);
  const auto& fv = from.vertices();
  const std::size_t n = fv.size(), m = planes.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = fv[i];
    Vec2 e = fv[(i + 1) % n] - a;
    // g_j(s) = c_j - s * d_j, the inside-distance to plane j along the edge.
    std::vector<double> c(m), d(m);
    for (std::size_t j = 0; j < m; ++j) {
      c[j] = planes[j].offset - dot(planes[j].normal, a);
      d[j] = dot(planes[j].normal, e);
    }
    auto min_at = [&](double s) {
      double v = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) v = std::min(v, c[j] - s * d[j]);
      return v;
    };
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        double denom = d[j] - d[k];
        if (denom == 0.0) continue;
        double s = (c[j] - c[k]) / denom;
        if (s <= 0.0 || s >= 1.0) continue;
        double v = min_at(s);
        if (v > best) best = v;
      }
  }
  return best;
}

}  // namespace

double distance_to_boundary_curve(Vec2 x, const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, point_segment_distance(x, v[i], v[(i + 1) % v.size()]));
  return best;
}

double intersection_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  const ConvexPolygon& subject = lex_less(p, q) ? p : q;
  const ConvexPolygon& window = lex_less(p, q) ? q : p;
  double eps = 1e-14 * std::max(measures(subject).diameter, measures(window).diameter);
  std::vector<Vec2> pts = subject.vertices();
  for (const HalfPlane& pl : edge_halfplanes(window)) {
    pts = clip_halfplane(pts, pl, eps);
    if (pts.size() < 3) return 0.0;
  }
  return std::max(0.0, polygon_area(pts));
}

double sym_diff_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  double ap = measures(p).area;
  double aq = measures(q).area;
  double ia = std::min(intersection_area(p, q), std::min(ap, aq));
  return std::max(0.0, ap + aq - 2.0 * ia);
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  return std::max(directed_boundary_hausdorff(p, q), directed_boundary_hausdorff(q, p));
}

ShapeMetricReport shape_metrics(const ConvexPolygon& p, const ConvexPolygon& q) {
  return {sym_diff_area(p, q), hausdorff_distance(p, q)};
}

}  // namespace avgdist

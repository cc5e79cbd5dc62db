#include "avgdist/erosion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace avgdist {

double ErosionProfile::area_at(double t) const {
  if (t < 0.0) throw std::invalid_argument("offset must be nonnegative");
  if (t >= inradius_ || pieces_.empty()) return 0.0;
  for (const ErosionPiece& p : pieces_)
    if (t < p.t_end || &p == &pieces_.back())
      return std::max(0.0, p.a + p.b * t + p.c * t * t);
  return 0.0;
}

std::vector<double> ErosionProfile::breakpoints() const {
  std::vector<double> bp;
  bp.reserve(pieces_.size() + 1);
  for (const ErosionPiece& p : pieces_) bp.push_back(p.t_begin);
  bp.push_back(inradius_);
  return bp;
}

namespace {

// Working state: supporting lines with their offsets at t = 0 plus the
// materialized vertex ring at the current stage time.
struct LineRing {
  std::vector<HalfPlane> lines;  // offsets are the t = 0 values
  std::vector<Vec2> verts;       // verts[i] = lines[i] ^ lines[i+1] at current time
};

Vec2 offset_intersection(const HalfPlane& a, const HalfPlane& b, double t) {
  double det = cross(a.normal, b.normal);
  double ca = a.offset - t, cb = b.offset - t;
  return {(ca * b.normal.y - cb * a.normal.y) / det,
          (a.normal.x * cb - b.normal.x * ca) / det};
}

// cot(theta/2) at the vertex between edges with outward normals na -> nb,
// where theta is the interior angle (exterior turn phi is the angle between
// the normals): cot(theta/2) = tan(phi/2) = sin(phi) / (1 + cos(phi)).
double cot_half_angle(Vec2 na, Vec2 nb) {
  double s = cross(na, nb);
  double c = dot(na, nb);
  return s / (1.0 + c);
}

// Rebuilds the vertex ring at time t, pruning lines whose edge already has
// (numerically) nonpositive length. Returns false when the body is
// degenerate: fewer than 3 lines, a normal gap of at least pi, a nonconvex
// ring or vanishing area.
bool rebuild(LineRing& ring, double t, double eps_len) {
  for (;;) {
    const std::size_t n = ring.lines.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (cross(ring.lines[i].normal, ring.lines[(i + 1) % n].normal) <= 1e-15) return false;
    ring.verts.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      ring.verts[i] = offset_intersection(ring.lines[i], ring.lines[(i + 1) % n], t);
    // Edge i runs from verts[i-1] to verts[i].
    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 a = ring.verts[(i + n - 1) % n];
      Vec2 b = ring.verts[i];
      Vec2 d = ring.lines[i].normal;
      // Signed length along the edge direction (CCW perp of the normal).
      if (cross(d, b - a) <= eps_len) dead.push_back(i);
    }
    if (dead.empty()) break;
    for (auto it = dead.rbegin(); it != dead.rend(); ++it)
      ring.lines.erase(ring.lines.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  double twice_area = 0.0;
  const std::size_t n = ring.verts.size();
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(ring.verts[i], ring.verts[(i + 1) % n]);
  return twice_area > 0.0;
}

}  // namespace

ErosionProfile erosion_profile(const ConvexPolygon& poly) {
  const double diam = measures(poly).diameter;
  const double tol_t = 1e-12 * diam;
  const double eps_len = 1e-12 * diam;

  // verts[i] is the intersection of lines[i] and lines[i+1], i.e. the
  // original vertex i+1.
  std::vector<Vec2> start_verts(poly.vertices().begin() + 1, poly.vertices().end());
  start_verts.push_back(poly.vertices().front());
  LineRing ring{edge_halfplanes(poly), std::move(start_verts)};
  std::vector<ErosionPiece> pieces;
  double t_now = 0.0;

  for (;;) {
    const std::size_t n = ring.lines.size();
    double area = 0.0, perim = 0.0, cot_sum = 0.0;
    std::vector<double> edge_len(n), shrink(n);
    std::vector<double> cot(n);
    for (std::size_t i = 0; i < n; ++i)
      cot[i] = cot_half_angle(ring.lines[i].normal, ring.lines[(i + 1) % n].normal);
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 a = ring.verts[(i + n - 1) % n];
      Vec2 b = ring.verts[i];
      area += 0.5 * cross(a, b);
      edge_len[i] = distance(a, b);
      perim += edge_len[i];
      cot_sum += cot[i];
      // Edge i loses length at both endpoints: vertices i-1 and i.
      shrink[i] = cot[(i + n - 1) % n] + cot[i];
    }

    double s_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      s_min = std::min(s_min, edge_len[i] / shrink[i]);

    if (s_min > tol_t) {
      ErosionPiece piece;
      piece.t_begin = t_now;
      piece.t_end = t_now + s_min;
      piece.a = area + perim * t_now + cot_sum * t_now * t_now;
      piece.b = -perim - 2.0 * cot_sum * t_now;
      piece.c = cot_sum;
      pieces.push_back(piece);
    }

    // Collapse every edge that vanishes together with the first one.
    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < n; ++i)
      if (edge_len[i] / shrink[i] <= s_min + tol_t) dead.push_back(i);
    t_now += s_min;
    for (auto it = dead.rbegin(); it != dead.rend(); ++it)
      ring.lines.erase(ring.lines.begin() + static_cast<std::ptrdiff_t>(*it));

    if (!rebuild(ring, t_now, eps_len)) break;
  }

  if (!pieces.empty()) pieces.back().t_end = t_now;
  return ErosionProfile(std::move(pieces), t_now);
}

std::optional<ConvexPolygon> erode(const ConvexPolygon& poly, double t) {
  if (t < 0.0) throw std::invalid_argument("offset must be nonnegative");
  if (t == 0.0) return poly;
  std::vector<HalfPlane> planes = edge_halfplanes(poly);
  for (HalfPlane& pl : planes) pl.offset -= t;
  try {
    return halfplane_intersection(std::move(planes));
  } catch (const EmptyOrUnbounded&) {
    return std::nullopt;
  }
}

}  // namespace avgdist

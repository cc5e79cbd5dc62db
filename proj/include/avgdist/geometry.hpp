#pragma once

// Exact convex-polygon primitives: validation, measures, support functions,
// half-plane intersection and random shape generation.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace avgdist {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);
double distance(Vec2 a, Vec2 b);
Vec2 normalized(Vec2 a);
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // CCW quarter turn
Vec2 rotated(Vec2 a, double angle);

// Tolerances, relative to the polygon diameter (or its square).
inline constexpr double kEpsConvex = 1e-12;  // strict-convexity floor for cross products
inline constexpr double kEpsMerge = 1e-10;   // consecutive-vertex merge distance
inline constexpr double kEpsInside = 1e-9;   // containment slack for boundary queries

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConvex : GeometryError {
  using GeometryError::GeometryError;
};
struct Degenerate : GeometryError {
  using GeometryError::GeometryError;
};
struct OutsidePolygon : GeometryError {
  using GeometryError::GeometryError;
};
struct EmptyOrUnbounded : GeometryError {
  using GeometryError::GeometryError;
};

class ConvexPolygon;

namespace detail {
// Canonicalizes a CCW vertex chain: merges near-duplicate consecutive
// vertices, elides collinear ones, and validates strict convexity.
ConvexPolygon from_ccw_chain(std::vector<Vec2> pts);
}  // namespace detail

// Counterclockwise, strictly convex vertex chain. Instances are immutable
// and always satisfy the class invariants; construct via make_polygon.
class ConvexPolygon {
 public:
  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Vec2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

 private:
  explicit ConvexPolygon(std::vector<Vec2> v) : verts_(std::move(v)) {}
  std::vector<Vec2> verts_;

  friend ConvexPolygon make_polygon(const std::vector<Vec2>&);
  friend ConvexPolygon detail::from_ccw_chain(std::vector<Vec2>);
};

struct Measures {
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
  Vec2 centroid;
};

// Validates and canonicalizes a point set in convex position. Points are
// sorted by angle around their mean, near-duplicates merged, collinear
// points elided. Throws NotConvex / Degenerate.
ConvexPolygon make_polygon(const std::vector<Vec2>& points);

Measures measures(const ConvexPolygon& poly);

// Distance from an interior point to the boundary; equals the minimum over
// edges of the distance to the edge's supporting line (see docs/math.md).
// Throws OutsidePolygon when x lies outside by more than kEpsInside*diameter.
double boundary_distance(const ConvexPolygon& poly, Vec2 x);

// Closed containment with kEpsInside slack.
bool contains(const ConvexPolygon& poly, Vec2 x);

// h(u) = max over vertices of v.u; direction need not be unit length.
double support_value(const ConvexPolygon& poly, Vec2 direction);

// Support values at n uniform angles 2*pi*i/n.
std::vector<double> sample_support(const ConvexPolygon& poly, int n_angles);

// {x : normal.x <= offset}; normal is normalized on input.
struct HalfPlane {
  Vec2 normal;
  double offset = 0.0;
};

// Intersection of half-planes; redundant constraints are dropped.
// Throws EmptyOrUnbounded when the intersection is empty, unbounded or has
// no interior.
ConvexPolygon halfplane_intersection(std::vector<HalfPlane> planes);

// Supporting lines of every edge (unit outward normals).
std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& poly);

// Polygon induced by support values h[i] at angles 2*pi*i/N.
ConvexPolygon from_support_samples(const std::vector<double>& h);

ConvexPolygon translated(const ConvexPolygon& poly, Vec2 t);
ConvexPolygon rotated(const ConvexPolygon& poly, double angle);
ConvexPolygon scaled(const ConvexPolygon& poly, double factor);

// Convex hull of n uniform points in a disk of the given radius; retried
// until the hull validates and is not too thin. Deterministic per seed.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, double scale = 1.0);

}  // namespace avgdist

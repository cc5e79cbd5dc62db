#include "avgdist/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "avgdist/erosion.hpp"
#include "avgdist/io.hpp"

namespace avgdist {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// SVG y grows downward; emit flipped y coordinates.
std::string points_attr(const ConvexPolygon& poly) {
  std::ostringstream os;
  bool first = true;
  for (const Vec2& v : poly.vertices()) {
    if (!first) os << ' ';
    os << num(v.x) << ',' << num(-v.y);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string shape_svg(const ConvexPolygon& poly, int n_levels) {
  double xmin = poly.vertices()[0].x, xmax = xmin;
  double ymin = -poly.vertices()[0].y, ymax = ymin;
  for (const Vec2& v : poly.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, -v.y);
    ymax = std::max(ymax, -v.y);
  }
  const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
  const double vx = xmin - margin, vy = ymin - margin;
  const double vw = xmax - xmin + 2.0 * margin, vh = ymax - ymin + 2.0 * margin;
  const double stroke = 0.005 * std::max(vw, vh);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' ' << num(vy)
     << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
  os << "  <polygon points=\"" << points_attr(poly)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\"/>\n";

  const ErosionProfile prof = erosion_profile(poly);
  for (int k = 1; k <= n_levels; ++k) {
    const double t = prof.inradius() * static_cast<double>(k) / (n_levels + 1);
    auto level = erode(poly, t);
    if (!level) continue;
    os << "  <polygon points=\"" << points_attr(*level)
       << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << num(0.6 * stroke)
       << "\" stroke-dasharray=\"" << num(3.0 * stroke) << ' ' << num(2.0 * stroke) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_shape_svg(const std::string& path, const ConvexPolygon& poly, int n_levels) {
  write_text_file(path, shape_svg(poly, n_levels));
}

}  // namespace avgdist

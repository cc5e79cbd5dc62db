#include "avgdist/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace avgdist {

double sig9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

ConvexPolygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open shape file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw IoError("shape file needs a \"vertices\" array: " + path);
  std::vector<Vec2> pts;
  for (const auto& item : j["vertices"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw IoError("vertices must be [x, y] pairs: " + path);
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  try {
    return make_polygon(pts);
  } catch (const GeometryError& e) {
    throw IoError("invalid shape in " + path + ": " + e.what());
  }
}

Json polygon_json(const ConvexPolygon& poly) {
  Json verts = Json::array();
  for (const Vec2& v : poly.vertices()) verts.push_back({sig9(v.x), sig9(v.y)});
  return Json{{"vertices", verts}};
}

void save_polygon(const std::string& path, const ConvexPolygon& poly) {
  write_text_file(path, polygon_json(poly).dump(2) + "\n");
}

Json manifest_json(const RunManifest& manifest) {
  Json j = Json::object();
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["seed"] = manifest.seed;
  j["version"] = manifest.version;
  j["input_paths"] = manifest.input_paths;
  j["output_paths"] = manifest.output_paths;
  j["duration_ms"] = sig9(manifest.duration_ms);
  return j;
}

Json breakdown_json(const EnergyBreakdown& bd) {
  Json j = Json::object();
  j["avg_dist"] = sig9(bd.avg_dist);
  j["area"] = sig9(bd.area);
  j["perimeter"] = sig9(bd.perimeter);
  j["ratio_term"] = sig9(bd.ratio_term);
  j["total"] = sig9(bd.total);
  return j;
}

Json result_json(const OptimizationResult& result, const RunManifest& manifest) {
  Json j = Json::object();
  j["shape"] = polygon_json(result.shape);
  j["energy"] = breakdown_json(result.energy);
  j["residuals"] = Json{{"stationarity", sig9(result.residual_stationarity)},
                        {"theorem3", sig9(result.residual_theorem3)}};
  j["isoperimetric_deficit"] = sig9(result.isoperimetric_deficit);
  j["manifest"] = manifest_json(manifest);
  return j;
}

Json check_json(const CheckReport& report) {
  Json j = Json::object();
  j["name"] = report.name;
  j["passed"] = report.passed;
  j["lhs"] = sig9(report.lhs);
  j["rhs"] = sig9(report.rhs);
  j["margin"] = sig9(report.margin);
  j["details"] = report.details;
  return j;
}

Json suite_json(const SuiteReport& report, const RunManifest& manifest) {
  Json checks = Json::array();
  for (const CheckReport& c : report.checks) checks.push_back(check_json(c));
  int sweep_failures = 0;
  for (const SweepRow& r : report.sweep)
    if (!r.passed) ++sweep_failures;
  Json j = Json::object();
  j["checks"] = checks;
  j["sweep_rows"] = report.sweep.size();
  j["sweep_failures"] = sweep_failures;
  j["failures"] = report.failures;
  j["manifest"] = manifest_json(manifest);
  return j;
}

Json constant_json(const ConstantSearchResult& result, const RunManifest& manifest) {
  Json j = Json::object();
  j["p"] = sig9(result.p);
  j["best_value"] = sig9(result.best_value);
  j["best_shape"] = polygon_json(result.best_shape);
  j["disk_value"] = sig9(result.disk_value);
  j["paper_bound"] = sig9(result.paper_bound);
  j["manifest"] = manifest_json(manifest);
  return j;
}

namespace {

std::string num9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream os;
  os << "iteration,total,step\n";
  for (const TraceRow& row : trace)
    os << row.iteration << ',' << num9(row.total) << ',' << num9(row.step) << '\n';
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "shape_index,n_vertices,p,lambda,check,passed,lhs,rhs,margin\n";
  for (const SweepRow& r : rows)
    os << r.shape_index << ',' << r.n_vertices << ',' << num9(r.p) << ',' << num9(r.lambda)
       << ',' << r.check << ',' << (r.passed ? 1 : 0) << ',' << num9(r.lhs) << ','
       << num9(r.rhs) << ',' << num9(r.margin) << '\n';
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace avgdist

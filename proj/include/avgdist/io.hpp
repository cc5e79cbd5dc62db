#pragma once

// File formats and serialization. All numeric output is rounded to 9
// significant digits before serialization so reruns are byte-identical.

#include <string>
#include <vector>

#include <json.hpp>

#include "avgdist/energy.hpp"
#include "avgdist/geometry.hpp"
#include "avgdist/optimize.hpp"
#include "avgdist/verify.hpp"

namespace avgdist {

inline constexpr const char* kToolVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rounds to 9 significant digits.
double sig9(double x);

using Json = nlohmann::ordered_json;

// Shape files: {"vertices": [[x, y], ...]}, any vertex order.
ConvexPolygon load_polygon(const std::string& path);
Json polygon_json(const ConvexPolygon& poly);
void save_polygon(const std::string& path, const ConvexPolygon& poly);

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::vector<std::string> input_paths;
  std::vector<std::string> output_paths;
  double duration_ms = 0.0;  // informational; the only nondeterministic field
};

Json manifest_json(const RunManifest& manifest);

Json breakdown_json(const EnergyBreakdown& bd);
Json result_json(const OptimizationResult& result, const RunManifest& manifest);
Json check_json(const CheckReport& report);
Json suite_json(const SuiteReport& report, const RunManifest& manifest);
Json constant_json(const ConstantSearchResult& result, const RunManifest& manifest);

std::string trace_csv(const std::vector<TraceRow>& trace);
std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace avgdist

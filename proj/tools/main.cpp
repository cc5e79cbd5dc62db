// Command-line front end: evaluate shapes, run optimizations, run the
// verification suite, and search the inequality constant.
//
// Exit codes: 0 success, 1 usage or parameter validation, 2 invalid input
// data, 3 verification failure.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avgdist/energy.hpp"
#include "avgdist/geometry.hpp"
#include "avgdist/io.hpp"
#include "avgdist/optimize.hpp"
#include "avgdist/svg.hpp"
#include "avgdist/verify.hpp"

namespace {

using avgdist::Json;

struct Timer {
  std::chrono::steady_clock::time_point begin = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin)
        .count();
  }
};

void warn_exponent_window(const avgdist::EnergyParams& params) {
  for (const std::string& w : avgdist::exponent_window_warnings(params))
    std::cerr << "warning: " << w << "\n";
}

int cmd_evaluate(const std::string& shape_path, const avgdist::EnergyParams& params,
                 long long mc_samples, std::uint64_t seed) {
  Timer timer;
  auto errs = avgdist::param_errors(params);
  if (!errs.empty()) {
    for (const auto& e : errs) std::cerr << "error: " << e << "\n";
    return 1;
  }
  warn_exponent_window(params);

  avgdist::ConvexPolygon poly = avgdist::load_polygon(shape_path);
  avgdist::EnergyBreakdown bd = avgdist::energy(poly, params);

  Json out = avgdist::breakdown_json(bd);
  if (mc_samples > 0) {
    avgdist::McEstimate mc = avgdist::avg_dist_mc(poly, params.p, mc_samples, seed);
    out["mc_estimate"] = avgdist::sig9(mc.estimate);
    out["mc_std_error"] = avgdist::sig9(mc.std_error);
  }

  avgdist::RunManifest manifest;
  manifest.command = "evaluate";
  manifest.parameters = {{"p", params.p},
                         {"lambda", params.lambda},
                         {"alpha", params.alpha},
                         {"beta", params.beta},
                         {"mc_samples", mc_samples}};
  manifest.seed = seed;
  manifest.input_paths = {shape_path};
  manifest.duration_ms = timer.elapsed_ms();
  out["manifest"] = avgdist::manifest_json(manifest);

  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_optimize(const avgdist::EnergyParams& params, int n, int max_iters, std::uint64_t seed,
                 const std::string& start, const std::string& out_dir) {
  Timer timer;
  avgdist::OptimizationConfig config;
  config.params = params;
  config.n = n;
  config.max_iters = max_iters;
  config.seed = seed;
  std::vector<std::string> inputs;
  if (start == "regular") {
    config.start = avgdist::StartShape::RegularPolygon;
  } else if (start == "random") {
    config.start = avgdist::StartShape::Random;
  } else {
    config.start = avgdist::StartShape::File;
    config.start_shape = avgdist::load_polygon(start);
    inputs.push_back(start);
  }
  auto errs = avgdist::config_errors(config);
  if (!errs.empty()) {
    for (const auto& e : errs) std::cerr << "error: " << e << "\n";
    return 1;
  }

  std::filesystem::create_directories(out_dir);
  const std::string result_path = out_dir + "/result.json";
  const std::string trace_path = out_dir + "/trace.csv";
  const std::string start_svg = out_dir + "/start.svg";
  const std::string final_svg = out_dir + "/final.svg";

  avgdist::ConvexPolygon start_poly =
      config.start == avgdist::StartShape::File
          ? *config.start_shape
          : avgdist::polygon_from(avgdist::project_to_feasible(
                config.start == avgdist::StartShape::RegularPolygon
                    ? avgdist::SupportVector{n, std::vector<double>(static_cast<std::size_t>(n), 1.0)}
                    : avgdist::support_vector_of(avgdist::random_convex_polygon(16, seed, 1.0), n)));

  avgdist::OptimizationResult result = avgdist::minimize(config);

  avgdist::RunManifest manifest;
  manifest.command = "optimize";
  manifest.parameters = {{"p", params.p},       {"lambda", params.lambda},
                         {"alpha", params.alpha}, {"beta", params.beta},
                         {"n", n},              {"max_iters", max_iters},
                         {"start", start}};
  manifest.seed = seed;
  manifest.input_paths = inputs;
  manifest.output_paths = {result_path, trace_path, start_svg, final_svg};
  manifest.duration_ms = timer.elapsed_ms();

  avgdist::write_text_file(result_path, avgdist::result_json(result, manifest).dump(2) + "\n");
  avgdist::write_text_file(trace_path, avgdist::trace_csv(result.trace));
  avgdist::write_shape_svg(start_svg, start_poly);
  avgdist::write_shape_svg(final_svg, result.shape);

  std::cout << "final total: " << avgdist::sig9(result.energy.total) << "\n";
  std::cout << "residual stationarity: " << avgdist::sig9(result.residual_stationarity) << "\n";
  std::cout << "residual theorem3: " << avgdist::sig9(result.residual_theorem3) << "\n";
  std::cout << "isoperimetric deficit: " << avgdist::sig9(result.isoperimetric_deficit) << "\n";
  return 0;
}

int cmd_verify(int corpus_size, std::uint64_t seed, const std::vector<double>& p_list,
               const std::vector<double>& lambda_list, const std::string& out_dir,
               bool inject_failure) {
  Timer timer;
  avgdist::SuiteConfig config;
  config.corpus_size = corpus_size;
  config.seed = seed;
  if (!p_list.empty()) config.p_list = p_list;
  if (!lambda_list.empty()) config.lambda_list = lambda_list;
  config.inject_failure = inject_failure;
  for (double p : config.p_list)
    if (!(p >= 1.0)) {
      std::cerr << "error: p must be >= 1 (got " << p << ")\n";
      return 1;
    }
  for (double lambda : config.lambda_list)
    if (!(lambda > 0.0)) {
      std::cerr << "error: lambda must be > 0 (got " << lambda << ")\n";
      return 1;
    }

  avgdist::SuiteReport report = avgdist::run_verification_suite(config);

  std::filesystem::create_directories(out_dir);
  const std::string report_path = out_dir + "/verify.json";
  const std::string sweep_path = out_dir + "/sweep.csv";

  avgdist::RunManifest manifest;
  manifest.command = "verify";
  manifest.parameters = {{"corpus_size", corpus_size},
                         {"p_list", config.p_list},
                         {"lambda_list", config.lambda_list}};
  manifest.seed = seed;
  manifest.output_paths = {report_path, sweep_path};
  manifest.duration_ms = timer.elapsed_ms();

  avgdist::write_text_file(report_path, avgdist::suite_json(report, manifest).dump(2) + "\n");
  avgdist::write_text_file(sweep_path, avgdist::sweep_csv(report.sweep));

  for (const avgdist::CheckReport& c : report.checks)
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.details << "\n";
  std::cout << report.failures << " failure(s) across " << report.checks.size()
            << " checks and " << report.sweep.size() << " sweep rows\n";
  return report.failures == 0 ? 0 : 3;
}

int cmd_search_constant(double p, int corpus_size, std::uint64_t seed, bool refine,
                        const std::string& out_dir) {
  Timer timer;
  if (!(p >= 1.0)) {
    std::cerr << "error: p must be >= 1 (got " << p << ")\n";
    return 1;
  }
  if (corpus_size < 1) {
    std::cerr << "error: corpus-size must be >= 1\n";
    return 1;
  }
  avgdist::ConstantSearchResult result = avgdist::search_constant(p, corpus_size, seed, refine);

  std::filesystem::create_directories(out_dir);
  const std::string shape_path = out_dir + "/best_shape.json";

  avgdist::RunManifest manifest;
  manifest.command = "search-constant";
  manifest.parameters = {{"p", p}, {"corpus_size", corpus_size}, {"refine", refine}};
  manifest.seed = seed;
  manifest.output_paths = {shape_path};
  manifest.duration_ms = timer.elapsed_ms();

  avgdist::save_polygon(shape_path, result.best_shape);
  std::cout << avgdist::constant_json(result, manifest).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation, minimization and verification of a penalized "
               "average-distance energy over convex polygons"};
  app.require_subcommand(1);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate the energy of a shape file");
  std::string shape_path;
  avgdist::EnergyParams eval_params;
  long long mc_samples = 0;
  std::uint64_t eval_seed = 1;
  evaluate->add_option("shape", shape_path, "Shape JSON file")->required();
  evaluate->add_option("--p", eval_params.p, "Distance exponent (>= 1)");
  evaluate->add_option("--lambda", eval_params.lambda, "Penalization weight (> 0)");
  evaluate->add_option("--alpha", eval_params.alpha, "Perimeter exponent");
  evaluate->add_option("--beta", eval_params.beta, "Area exponent");
  evaluate->add_option("--mc-samples", mc_samples, "Append a Monte Carlo cross-check");
  evaluate->add_option("--seed", eval_seed, "Monte Carlo seed");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Minimize the energy over convex shapes");
  avgdist::EnergyParams opt_params;
  int opt_n = 64, opt_iters = 500;
  std::uint64_t opt_seed = 1;
  std::string opt_start = "regular";
  std::string opt_out = "out";
  optimize->add_option("--p", opt_params.p, "Distance exponent (>= 1)");
  optimize->add_option("--lambda", opt_params.lambda, "Penalization weight (> 0)");
  optimize->add_option("--alpha", opt_params.alpha, "Perimeter exponent");
  optimize->add_option("--beta", opt_params.beta, "Area exponent");
  optimize->add_option("--n", opt_n, "Support-function resolution (>= 8)");
  optimize->add_option("--max-iters", opt_iters, "Iteration budget (>= 1)");
  optimize->add_option("--seed", opt_seed, "Seed for random starts");
  optimize->add_option("--start", opt_start, "regular, random, or a shape file path");
  optimize->add_option("--out-dir", opt_out, "Output directory");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  int ver_corpus = 200;
  std::uint64_t ver_seed = 1;
  std::vector<double> ver_p, ver_lambda;
  std::string ver_out = "out";
  bool inject_failure = false;
  verify->add_option("--corpus-size", ver_corpus, "Random corpus size (0 = fixtures only)");
  verify->add_option("--seed", ver_seed, "Corpus seed");
  verify->add_option("--p", ver_p, "Distance exponents to sweep");
  verify->add_option("--lambda", ver_lambda, "Penalization weights to sweep");
  verify->add_option("--out-dir", ver_out, "Output directory");
  verify->add_flag("--inject-failure", inject_failure, "Self-test of the failure exit path")
      ->group("");

  // search-constant
  auto* search = app.add_subcommand("search-constant",
                                    "Search the sharpest constant of the integral inequality");
  double sc_p = 1.0;
  int sc_corpus = 200;
  std::uint64_t sc_seed = 1;
  bool sc_refine = false;
  std::string sc_out = "out";
  search->add_option("--p", sc_p, "Distance exponent (>= 1)");
  search->add_option("--corpus-size", sc_corpus, "Random corpus size (>= 1)");
  search->add_option("--seed", sc_seed, "Corpus seed");
  search->add_flag("--refine", sc_refine, "Refine the best shape by local search");
  search->add_option("--out-dir", sc_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (evaluate->parsed())
      return cmd_evaluate(shape_path, eval_params, mc_samples, eval_seed);
    if (optimize->parsed())
      return cmd_optimize(opt_params, opt_n, opt_iters, opt_seed, opt_start, opt_out);
    if (verify->parsed())
      return cmd_verify(ver_corpus, ver_seed, ver_p, ver_lambda, ver_out, inject_failure);
    if (search->parsed())
      return cmd_search_constant(sc_p, sc_corpus, sc_seed, sc_refine, sc_out);
  } catch (const avgdist::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const avgdist::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

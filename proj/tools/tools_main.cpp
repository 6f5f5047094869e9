// Command-line front end: simulation, fitting, cross validation, Monte Carlo
// experiments, scaling studies, bound verification, and timing.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtf/analysis.hpp"
#include "mtf/boundary.hpp"
#include "mtf/cross_validation.hpp"
#include "mtf/csv.hpp"
#include "mtf/dyadic.hpp"
#include "mtf/estimator.hpp"
#include "mtf/experiment.hpp"
#include "mtf/rng.hpp"
#include "mtf/signals.hpp"
#include "mtf/tvd.hpp"

namespace {

struct CommonArgs {
  std::string signal = "smooth";
  int n = 1024;
  double sigma = 0.3;
  std::uint64_t seed = 1;
  int degree = 0;
  double lambda = 1.0;
  std::string lambda_grid;
  std::string variant = "dyadic";
  std::string boundary_endpoints = "on";
  int reps = 20;
  std::string out;
  std::string input;
  int pieces = 4;
  int piece_degree = 0;
};

std::vector<double> parse_grid(const std::string& text) {
  // "a:b:step" or a comma-separated list
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double a, b, step;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0) {
      throw CLI::ValidationError("--lambda-grid expects a:b:step");
    }
    for (double v = a; v <= b + 1e-12; v += step) grid.push_back(v);
  } else {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) grid.push_back(std::stod(token));
    }
  }
  if (grid.empty()) throw CLI::ValidationError("empty penalty grid");
  std::sort(grid.begin(), grid.end());
  return grid;
}

mtf::Variant parse_variant(const std::string& name) {
  if (name == "full") return mtf::Variant::full;
  if (name == "dyadic") return mtf::Variant::dyadic;
  throw CLI::ValidationError("--variant must be full or dyadic");
}

mtf::SignalSpec make_spec(const CommonArgs& args) {
  mtf::SignalSpec spec;
  spec.kind = mtf::parse_signal_kind(args.signal);
  spec.n = args.n;
  spec.pieces = args.pieces;
  spec.piece_degree = args.piece_degree;
  if (spec.kind == mtf::SignalKind::custom) {
    if (args.input.empty()) {
      throw std::runtime_error("--signal custom requires --input <file>");
    }
    std::ifstream in(args.input);
    if (!in) throw std::runtime_error("cannot open input file: " + args.input);
    double v;
    while (in >> v) spec.custom.push_back(v);
    spec.n = static_cast<int>(spec.custom.size());
  }
  return spec;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit_metadata(std::ostream& out, const CommonArgs& args,
                   const std::string& command) {
  out << "# command=" << command << " signal=" << args.signal
      << " n=" << args.n << " sigma=" << mtf::format_double(args.sigma)
      << " seed=" << args.seed << " degree=" << args.degree
      << " variant=" << args.variant
      << " boundary_endpoints=" << args.boundary_endpoints << "\n";
}

int run_simulate(const CommonArgs& args) {
  const auto [truth, y] = mtf::simulate(make_spec(args), args.sigma, args.seed);
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "simulate");
  mtf::write_simulation_csv(out, truth, y);
  return 0;
}

int run_fit(const CommonArgs& args) {
  const auto [truth, y] = mtf::simulate(make_spec(args), args.sigma, args.seed);
  mtf::FitConfig cfg;
  cfg.degree = args.degree;
  cfg.penalty = args.lambda;
  cfg.variant = parse_variant(args.variant);
  const mtf::FitBand band =
      mtf::fit_series(y, cfg, args.boundary_endpoints == "on");
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "fit");
  out << "# lambda=" << mtf::format_double(args.lambda) << "\n";
  mtf::write_fit_csv(out, y, band, &truth);
  return 0;
}

int run_cv(const CommonArgs& args) {
  const auto [truth, y] = mtf::simulate(make_spec(args), args.sigma, args.seed);
  mtf::CvOptions options;
  options.degree = args.degree;
  options.variant = parse_variant(args.variant);
  options.lambda_grid = parse_grid(
      args.lambda_grid.empty() ? "0:100:5" : args.lambda_grid);
  options.boundary_endpoints = args.boundary_endpoints == "on";
  const mtf::CvResult result = mtf::cross_validate(y, options);
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "cv");
  out << "# best_lambda=" << mtf::format_double(result.best_lambda) << "\n";
  out << "lambda,score\n";
  for (std::size_t k = 0; k < result.scores.size(); ++k) {
    out << mtf::format_double(options.lambda_grid[k]) << ','
        << mtf::format_double(result.scores[k]) << '\n';
  }
  return 0;
}

int run_exp(const CommonArgs& args) {
  mtf::ExperimentConfig config;
  config.signal = make_spec(args);
  config.sigma = args.sigma;
  config.seed = args.seed;
  config.degree = args.degree;
  config.lambda_grid = parse_grid(
      args.lambda_grid.empty() ? "0:100:5" : args.lambda_grid);
  config.replications = args.reps;
  config.variant = parse_variant(args.variant);
  config.boundary_endpoints = args.boundary_endpoints == "on";
  const mtf::ExperimentResult result = mtf::run_experiment(config);
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "experiment");
  out << "# reps=" << args.reps
      << " mean_mse=" << mtf::format_double(result.mean_mse)
      << " median_mse=" << mtf::format_double(result.median_mse)
      << " q25=" << mtf::format_double(result.q25)
      << " q75=" << mtf::format_double(result.q75) << "\n";
  mtf::write_experiment_csv(out, result);
  return 0;
}

int run_rates(const CommonArgs& args, const std::string& kind,
              std::vector<int> sizes) {
  if (sizes.empty()) sizes = {256, 1024, 4096};
  const mtf::RateResult result = mtf::rate_experiment(
      mtf::parse_rate_kind(kind), sizes, args.reps, args.sigma, args.seed);
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "rates");
  out << "# kind=" << kind
      << " slope=" << mtf::format_double(result.slope) << "\n";
  out << "n,mean_sq_err\n";
  for (const mtf::RatePoint& point : result.points) {
    out << point.n << ',' << mtf::format_double(point.mean_sq_err) << '\n';
  }
  return 0;
}

int run_verify_bounds(const CommonArgs& args) {
  const auto [truth, y] = mtf::simulate(make_spec(args), args.sigma, args.seed);
  std::vector<double> noise(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) noise[i] = y[i] - truth[i];
  mtf::FitConfig cfg;
  cfg.degree = args.degree;
  cfg.penalty = args.lambda;
  cfg.variant = parse_variant(args.variant);
  if (cfg.penalty == 0.0) {
    std::cerr << "verify-bounds: lambda = 0 makes the SE term infinite; "
                 "verdicts are vacuous\n";
  }
  const auto diags = mtf::verify_deterministic_bound(truth, noise, cfg);
  const mtf::FitBand band = cfg.variant == mtf::Variant::dyadic
                                ? mtf::fit_dyadic(y, cfg)
                                : mtf::fit(y, cfg);
  std::vector<double> errors(diags.size());
  for (std::size_t k = 0; k < diags.size(); ++k) {
    errors[k] = band.point[diags[k].index - 1] - truth[diags[k].index - 1];
  }
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "verify-bounds");
  out << "# lambda=" << mtf::format_double(args.lambda) << "\n";
  mtf::write_bounds_csv(out, diags, errors);
  return 0;
}

int run_bench(const CommonArgs& args, std::vector<int> sizes) {
  if (sizes.empty()) sizes = {256, 512, 1024, 2048, 4096};
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  emit_metadata(out, args, "bench");
  out << "n,seconds\n";
  mtf::FitConfig cfg;
  cfg.degree = args.degree;
  cfg.penalty = args.lambda;
  cfg.variant = parse_variant(args.variant);
  for (int n : sizes) {
    mtf::CounterRng rng(args.seed + n);
    std::vector<double> y(n);
    for (double& v : y) v = rng.normal();
    const auto start = std::chrono::steady_clock::now();
    const mtf::FitBand band = cfg.variant == mtf::Variant::dyadic
                                  ? mtf::fit_dyadic(y, cfg)
                                  : mtf::fit(y, cfg);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (band.lower.empty()) return 1;
    out << n << ',' << mtf::format_double(elapsed) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minmax trend filtering: locally adaptive bands from penalized "
               "local polynomial fits"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string rate_kind = "fast";
  std::vector<int> sizes;

  const auto add_common = [&](CLI::App* cmd, bool with_lambda) {
    cmd->add_option("--signal", args.signal,
                    "smooth|doppler|discont|pwpoly|custom")
        ->check(CLI::IsMember({"smooth", "doppler", "discont", "pwpoly",
                               "custom"}));
    cmd->add_option("--n", args.n, "series length");
    cmd->add_option("--sigma", args.sigma, "noise standard deviation");
    cmd->add_option("--seed", args.seed, "RNG seed");
    cmd->add_option("--degree", args.degree, "polynomial degree (0..4)");
    if (with_lambda) {
      cmd->add_option("--lambda", args.lambda, "penalty");
      cmd->add_option("--lambda-grid", args.lambda_grid,
                      "a:b:step or comma list");
    }
    cmd->add_option("--variant", args.variant, "full|dyadic")
        ->check(CLI::IsMember({"full", "dyadic"}));
    cmd->add_option("--boundary-endpoints", args.boundary_endpoints,
                    "on|off: sharper last/first-point estimators")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--reps", args.reps, "replications");
    cmd->add_option("--out", args.out, "output CSV path (default stdout)");
    cmd->add_option("--input", args.input,
                    "series file for --signal custom (whitespace-separated)");
    cmd->add_option("--pieces", args.pieces, "pwpoly: number of pieces");
    cmd->add_option("--piece-degree", args.piece_degree,
                    "pwpoly: per-piece degree");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "draw a noisy signal");
  add_common(simulate, false);
  CLI::App* fit = app.add_subcommand("fit", "fit one band");
  add_common(fit, true);
  CLI::App* cv = app.add_subcommand("cv", "two-fold cross validation");
  add_common(cv, true);
  CLI::App* experiment =
      app.add_subcommand("experiment", "replicated CV experiment");
  add_common(experiment, true);
  CLI::App* rates = app.add_subcommand("rates", "error scaling in n");
  add_common(rates, true);
  rates->add_option("--kind", rate_kind, "fast|slow|boundary");
  rates->add_option("--sizes", sizes, "series lengths");
  CLI::App* verify =
      app.add_subcommand("verify-bounds", "check the pointwise error bounds");
  add_common(verify, true);
  CLI::App* bench = app.add_subcommand("bench", "single-fit wall times");
  add_common(bench, true);
  bench->add_option("--sizes", sizes, "series lengths");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(args);
    if (fit->parsed()) return run_fit(args);
    if (cv->parsed()) return run_cv(args);
    if (experiment->parsed()) return run_exp(args);
    if (rates->parsed()) return run_rates(args, rate_kind, sizes);
    if (verify->parsed()) return run_verify_bounds(args);
    if (bench->parsed()) return run_bench(args, sizes);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}

#include "mtf/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtf/analysis.hpp"
#include "mtf/boundary.hpp"
#include "mtf/rng.hpp"

namespace mtf {

double mean_squared_error(const std::vector<double>& estimate,
                          const std::vector<double>& truth) {
  if (estimate.size() != truth.size()) {
    throw std::invalid_argument("mean_squared_error: size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = estimate[i] - truth[i];
    total += d * d;
  }
  return total / static_cast<double>(truth.size());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.folds != 2) {
    throw std::invalid_argument("run_experiment: two folds supported");
  }
  if (config.lambda_grid.empty()) {
    throw std::invalid_argument("run_experiment: empty penalty grid");
  }
  ExperimentResult result;
  result.rows.reserve(config.replications);

  CvOptions cv;
  cv.degree = config.degree;
  cv.variant = config.variant;
  cv.lambda_grid = config.lambda_grid;
  cv.boundary_endpoints = config.boundary_endpoints;
  cv.point_rule = config.point_rule;

  FitConfig fit_cfg;
  fit_cfg.degree = config.degree;
  fit_cfg.variant = config.variant;
  fit_cfg.point_rule = config.point_rule;

  std::vector<double> mses;
  for (int rep = 0; rep < config.replications; ++rep) {
    const std::uint64_t rep_seed = CounterRng::derive(config.seed, rep);
    const auto [truth, y] = simulate(config.signal, config.sigma, rep_seed);
    const CvResult selected = cross_validate(y, cv);
    fit_cfg.penalty = selected.best_lambda;
    const FitBand band = fit_series(y, fit_cfg, config.boundary_endpoints);
    const double mse = mean_squared_error(band.point, truth);
    result.rows.push_back({rep, selected.best_lambda, mse});
    mses.push_back(mse);
  }

  std::sort(mses.begin(), mses.end());
  const std::size_t n = mses.size();
  if (n > 0) {
    double total = 0.0;
    for (double v : mses) total += v;
    result.mean_mse = total / n;
    result.median_mse = mses[n / 2];
    result.q25 = mses[n / 4];
    result.q75 = mses[(3 * n) / 4];
  }
  return result;
}

RateKind parse_rate_kind(const std::string& name) {
  if (name == "fast") return RateKind::fast;
  if (name == "slow") return RateKind::slow;
  if (name == "boundary") return RateKind::boundary;
  throw std::invalid_argument("unknown rate kind: " + name);
}

namespace {

// Doppler shifted away from the x -> 0 singularity so the sampled total
// variation stays bounded as n grows.
std::vector<double> slow_rate_truth(int n) {
  std::vector<double> theta(n);
  for (int i = 1; i <= n; ++i) {
    const double x = 0.2 + 0.8 * static_cast<double>(i) / n;
    theta[i - 1] = std::sin(4.0 / x) + 1.5;
  }
  return theta;
}

// Sine over the left three quarters, constant on the last quarter.
std::vector<double> boundary_rate_truth(int n) {
  std::vector<double> theta(n);
  constexpr double pi = std::numbers::pi;
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    theta[i - 1] = x < 0.75 ? std::sin(4.0 * pi * x) : 2.0;
  }
  return theta;
}

double fitted_slope(const std::vector<RatePoint>& points) {
  // least squares of log(err) on log(n)
  const std::size_t k = points.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const RatePoint& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.mean_sq_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

RateResult rate_experiment(RateKind kind, const std::vector<int>& sizes,
                           int replications, double sigma,
                           std::uint64_t seed) {
  if (sizes.size() < 2) {
    throw std::invalid_argument("rate_experiment: at least two sizes");
  }
  RateResult result;
  FitConfig cfg;
  cfg.degree = 0;
  cfg.variant = Variant::dyadic;

  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const int n = sizes[s];
    std::vector<double> truth;
    double lambda = 0.0;
    switch (kind) {
      case RateKind::fast: {
        SignalSpec spec;
        spec.kind = SignalKind::pwpoly;
        spec.n = n;
        spec.pieces = 4;
        spec.piece_degree = 0;
        truth = evaluate_signal(spec);
        lambda = std::sqrt(n * sigma * sigma * std::log(n) / 4.0);
        break;
      }
      case RateKind::slow: {
        truth = slow_rate_truth(n);
        const double v = tv_order(truth, 1);
        lambda = std::pow(n, 1.0 / 3.0) * std::pow(v, -1.0 / 3.0) *
                 std::pow(sigma, 4.0 / 3.0) * std::pow(std::log(n), 5.0 / 6.0);
        break;
      }
      case RateKind::boundary: {
        truth = boundary_rate_truth(n);
        lambda = sigma * std::sqrt(n * std::log(n));
        break;
      }
    }
    cfg.penalty = lambda;

    double total = 0.0;
    for (int rep = 0; rep < replications; ++rep) {
      const std::uint64_t rep_seed =
          CounterRng::derive(seed, s * 10007 + rep);
      std::vector<double> y = truth;
      CounterRng rng(rep_seed);
      for (double& value : y) value += sigma * rng.normal();
      if (kind == RateKind::boundary) {
        const BoundaryFit fit = fit_boundary(y, 0, lambda);
        const double err = fit.point - truth[n - 1];
        total += err * err;
      } else {
        const FitBand band = fit_series(y, cfg, true);
        total += mean_squared_error(band.point, truth);
      }
    }
    result.points.push_back({n, total / replications});
  }
  result.slope = fitted_slope(result.points);
  return result;
}

}  // namespace mtf

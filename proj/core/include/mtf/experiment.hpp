#pragma once

#include <cstdint>
#include <vector>

#include "mtf/cross_validation.hpp"
#include "mtf/signals.hpp"

namespace mtf {

struct ExperimentConfig {
  SignalSpec signal;
  double sigma = 0.3;
  std::uint64_t seed = 1;
  int degree = 3;
  std::vector<double> lambda_grid;
  int folds = 2;
  int replications = 100;
  Variant variant = Variant::dyadic;
  bool boundary_endpoints = true;
  PointRule point_rule = PointRule::midpoint;
};

struct ExperimentRow {
  int rep = 0;
  double lambda_selected = 0.0;
  double mse = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  double mean_mse = 0.0;
  double median_mse = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
};

double mean_squared_error(const std::vector<double>& estimate,
                          const std::vector<double>& truth);

// Simulate, cross-validate the penalty, fit, score; one row per replication
// with independent derived seeds.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class RateKind { fast, slow, boundary };

struct RatePoint {
  int n = 0;
  double mean_sq_err = 0.0;
};

struct RateResult {
  std::vector<RatePoint> points;
  double slope = 0.0;  // least-squares slope of log err against log n
};

RateKind parse_rate_kind(const std::string& name);

// Scaling experiments with the theorem-prescribed penalties (constants 1):
//   fast:     piecewise-constant truth (4 pieces), degree 0,
//             lambda = sqrt(n sigma^2 log n / 4), whole-series MSE
//   slow:     bounded-variation doppler proxy, degree 0,
//             lambda = n^{1/3} V^{-1/3} sigma^{4/3} (log n)^{5/6}
//   boundary: truth locally constant at the right edge, degree 0,
//             lambda = sigma sqrt(n log n), squared error at index n
RateResult rate_experiment(RateKind kind, const std::vector<int>& sizes,
                           int replications, double sigma, std::uint64_t seed);

}  // namespace mtf

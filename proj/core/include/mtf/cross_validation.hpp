#pragma once

#include <vector>

#include "mtf/estimator.hpp"

namespace mtf {

struct CvOptions {
  int degree = 0;
  Variant variant = Variant::dyadic;
  std::vector<double> lambda_grid;
  bool boundary_endpoints = true;
  PointRule point_rule = PointRule::midpoint;
};

struct CvResult {
  double best_lambda = 0.0;
  std::vector<double> scores;  // summed held-out squared error per lambda
};

// Full-series fit of the configured variant, with indices 1 and n replaced
// by the sharper boundary estimators when requested.
FitBand fit_series(const std::vector<double>& y, const FitConfig& config,
                   bool boundary_endpoints);

std::vector<FitBand> fit_series_multi(const std::vector<double>& y,
                                      const FitConfig& config,
                                      const std::vector<double>& penalties,
                                      bool boundary_endpoints);

// Two-fold cross validation on odd/even index interleavings. A held-out
// index is predicted by the fitted value at the nearest training index
// (ties toward the smaller index). Ties in the score go to the smaller
// penalty.
CvResult cross_validate(const std::vector<double>& y, const CvOptions& options);

}  // namespace mtf

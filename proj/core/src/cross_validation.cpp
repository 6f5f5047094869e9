#include "mtf/cross_validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mtf/boundary.hpp"
#include "mtf/dyadic.hpp"

namespace mtf {

std::vector<FitBand> fit_series_multi(const std::vector<double>& y,
                                      const FitConfig& config,
                                      const std::vector<double>& penalties,
                                      bool boundary_endpoints) {
  FitConfig cfg = config;
  std::vector<FitBand> bands;
  if (config.variant == Variant::dyadic) {
    bands = fit_dyadic_multi(y, cfg, penalties);
  } else if (config.variant == Variant::full) {
    bands = fit_multi(y, cfg, penalties);
  } else {
    throw std::invalid_argument("fit_series: full or dyadic variant expected");
  }
  if (boundary_endpoints && y.size() > 1) {
    const bool dyad = config.variant == Variant::dyadic;
    const int n = static_cast<int>(y.size());
    for (std::size_t k = 0; k < penalties.size(); ++k) {
      const double lambda = penalties[k];
      const BoundaryFit right =
          dyad ? fit_boundary_dyadic(y, config.degree, lambda,
                                     config.point_rule)
               : fit_boundary(y, config.degree, lambda, config.point_rule);
      const BoundaryFit left =
          dyad ? fit_left_boundary_dyadic(y, config.degree, lambda,
                                          config.point_rule)
               : fit_left_boundary(y, config.degree, lambda, config.point_rule);
      bands[k].lower[0] = left.lower;
      bands[k].upper[0] = left.upper;
      bands[k].point[0] = left.point;
      bands[k].lower[n - 1] = right.lower;
      bands[k].upper[n - 1] = right.upper;
      bands[k].point[n - 1] = right.point;
    }
  }
  return bands;
}

FitBand fit_series(const std::vector<double>& y, const FitConfig& config,
                   bool boundary_endpoints) {
  return fit_series_multi(y, config, {config.penalty}, boundary_endpoints)[0];
}

namespace {

// Nearest element of `sorted` to target; ties toward the smaller value.
int nearest_index(const std::vector<int>& sorted, int target) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), target);
  if (it == sorted.begin()) return 0;
  if (it == sorted.end()) return static_cast<int>(sorted.size()) - 1;
  const int hi = static_cast<int>(it - sorted.begin());
  const int lo = hi - 1;
  return (target - sorted[lo] <= sorted[hi] - target) ? lo : hi;
}

}  // namespace

CvResult cross_validate(const std::vector<double>& y,
                        const CvOptions& options) {
  if (options.lambda_grid.empty()) {
    throw std::invalid_argument("cross_validate: empty penalty grid");
  }
  const int n = static_cast<int>(y.size());
  CvResult result;
  result.scores.assign(options.lambda_grid.size(), 0.0);

  FitConfig cfg;
  cfg.degree = options.degree;
  cfg.variant = options.variant;
  cfg.point_rule = options.point_rule;

  for (int fold = 0; fold < 2; ++fold) {
    // Training positions: odd 1-based indices for fold 0, even for fold 1.
    std::vector<int> train;
    std::vector<double> sub;
    for (int i = fold == 0 ? 1 : 2; i <= n; i += 2) {
      train.push_back(i);
      sub.push_back(y[i - 1]);
    }
    if (train.empty() || static_cast<int>(train.size()) == n) continue;
    const std::vector<FitBand> bands = fit_series_multi(
        sub, cfg, options.lambda_grid, options.boundary_endpoints);
    for (int i = 1; i <= n; ++i) {
      if ((i % 2 == 1) == (fold == 0)) continue;  // training index
      const int p = nearest_index(train, i);
      for (std::size_t k = 0; k < bands.size(); ++k) {
        const double err = bands[k].point[p] - y[i - 1];
        result.scores[k] += err * err;
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < result.scores.size(); ++k) {
    if (result.scores[k] < result.scores[best]) best = k;
  }
  result.best_lambda = options.lambda_grid[best];
  return result;
}

}  // namespace mtf

#pragma once

#include <vector>

#include "mtf/estimator.hpp"

namespace mtf {

struct BoundaryFit {
  double lower = 0.0;
  double upper = 0.0;
  double point = 0.0;
};

// Last-point band over intervals containing n, with the two-case penalty
// coefficient (+1 when I != J, -1 when I == J). Sharper at the boundary than
// the interior estimator.
BoundaryFit fit_boundary(const std::vector<double>& y, int degree,
                         double penalty, PointRule rule = PointRule::midpoint);

// Same contract restricted to the dyadified family D_n.
BoundaryFit fit_boundary_dyadic(const std::vector<double>& y, int degree,
                                double penalty,
                                PointRule rule = PointRule::midpoint);

// First-point estimators by index reflection.
BoundaryFit fit_left_boundary(const std::vector<double>& y, int degree,
                              double penalty,
                              PointRule rule = PointRule::midpoint);
BoundaryFit fit_left_boundary_dyadic(const std::vector<double>& y, int degree,
                                     double penalty,
                                     PointRule rule = PointRule::midpoint);

}  // namespace mtf

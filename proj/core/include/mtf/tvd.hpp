#pragma once

#include <vector>

namespace mtf {

// Exact minimizer of 1/2 sum (y_i - t_i)^2 + penalty * sum |t_{i+1} - t_i|.
std::vector<double> solve_tvd(const std::vector<double>& y, double penalty);

double tvd_objective(const std::vector<double>& y, double penalty,
                     const std::vector<double>& theta);

// Maximum violation of the subgradient optimality conditions for theta; the
// returned residual is <= 1e-8 iff theta is the exact solution (up to float
// roundoff in the dual recursion).
double kkt_residual(const std::vector<double>& y, double penalty,
                    const std::vector<double>& theta);

}  // namespace mtf

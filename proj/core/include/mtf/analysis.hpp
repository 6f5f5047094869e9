#pragma once

#include <utility>
#include <vector>

#include "mtf/estimator.hpp"
#include "mtf/interval.hpp"

namespace mtf {

enum class NoiseMode { global_sup, at_index, boundary, boundary_dyadic };
enum class BiasRestrict { all, dyadified };
enum class SeMode { interior, boundary };

struct BoundDiagnostics {
  int index = 0;
  Interval interval;  // minimizing J of the upper-side bound
  double bias_plus = 0.0;
  double bias_minus = 0.0;
  double se = 0.0;
  double effective_noise = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
};

// (Bias_+, Bias_-): max/min over admissible I within J containing i of the
// projected truth at i minus the truth at i. Nonnegative / nonpositive since
// the singleton {i} is admissible.
std::pair<double, double> bias_terms(const std::vector<double>& truth, int i,
                                     const Interval& j, int degree,
                                     BiasRestrict restrict = BiasRestrict::all,
                                     const DyadifiedFamily* family = nullptr);

// Effective noise M over the mode's interval family:
//   global_sup: max over all I of ||P eps_I||_inf sqrt(|I|)
//   at_index:   max over I in D_index of |(P eps_I)_index| sqrt(|I|)
//   boundary:   max over I containing n of |(P eps_I)_n| sqrt(|I|)
//   boundary_dyadic: same over D_n
double effective_noise(const std::vector<double>& noise, int degree,
                       NoiseMode mode, int index = 0,
                       const DyadifiedFamily* family = nullptr);

// Interior: M/sqrt(Dist(i, dJ)) + M/sqrt(|J|) + M^2/(4 lambda) + lambda/|J|.
// Boundary: drops the Dist term. penalty == 0 with noise > 0 yields an
// infinite sentinel.
double se_term(int i, const Interval& j, double penalty, double noise,
               SeMode mode);

// Closed form of max over 1 <= x <= size of (m / sqrt(x) - penalty / x).
double opt_closed_form(double m, double penalty, long long size);

// Executable form of the deterministic pointwise error bounds: fits
// y = truth + noise with the configured variant and checks, per index, that
// the band error is bracketed by max_J(Bias_- - SE) and min_J(Bias_+ + SE)
// with the realized effective noise. Boundary variants verify index n only.
std::vector<BoundDiagnostics> verify_deterministic_bound(
    const std::vector<double>& truth, const std::vector<double>& noise,
    const FitConfig& config);

// TV^(r): n^{r-1} times the l1 norm of the r-fold difference. Requires
// n > order >= 1.
double tv_order(const std::vector<double>& theta, int order);

// Recursive dyadic partition whose leaves I all satisfy
// TV^(order)(theta_I) <= delta * TV^(order)(theta); pieces with length
// <= order count as zero variation.
std::vector<Interval> bv_partition(const std::vector<double>& theta, int order,
                                   double delta);

}  // namespace mtf

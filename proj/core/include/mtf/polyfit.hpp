#pragma once

#include <vector>

#include "mtf/interval.hpp"

namespace mtf {

/// Normal-equation pieces of a degree-r least squares fit over an interval,
/// in the raw scaled-monomial basis (u/n)^k.
struct GramSystem {
  Interval interval;
  int degree = 0;
  std::vector<double> gram;    // (degree+1)^2 row-major, symmetric
  std::vector<double> moment;  // degree+1
};

/// Prefix power sums S_k[t] = sum_{u<=t} (u/n)^k for k in [0, 2r] and prefix
/// response moments T_k[t] = sum_{u<=t} (u/n)^k y_u for k in [0, r]. Any
/// interval's GramSystem is a difference of prefixes.
class MomentAccumulator {
 public:
  MomentAccumulator(const std::vector<double>& y, int degree);

  int size() const { return n_; }
  int degree() const { return degree_; }

  double power_prefix(int k, int t) const { return power_[k][t]; }
  double response_prefix(int k, int t) const { return response_[k][t]; }

  GramSystem gram_system(const Interval& interval) const;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::vector<std::vector<double>> power_;     // [0, 2r] x [0, n]
  std::vector<std::vector<double>> response_;  // [0, r] x [0, n]
};

// Fitted value at index i of the degree-r least squares polynomial fit of y
// restricted to `interval`. When |I| <= degree+1 the projection is the
// identity and y_i is returned exactly. Requires i in I.
double projection_fit_at(const std::vector<double>& y, const Interval& interval,
                         int degree, int i);

// Full fitted vector P y_I, length |I|.
std::vector<double> projection_values(const std::vector<double>& y,
                                      const Interval& interval, int degree);

// Largest diagonal entry of the projection matrix for interval length m;
// equals 1 when m <= degree+1.
double projection_diag_max(int m, int degree);

}  // namespace mtf

#include "mtf/polyfit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poly_internal.hpp"

namespace mtf {

MomentAccumulator::MomentAccumulator(const std::vector<double>& y, int degree)
    : n_(static_cast<int>(y.size())), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("MomentAccumulator: degree >= 0");
  if (n_ < 1) throw std::invalid_argument("MomentAccumulator: empty series");
  power_.assign(2 * degree + 1, std::vector<double>(n_ + 1, 0.0));
  response_.assign(degree + 1, std::vector<double>(n_ + 1, 0.0));
  for (int t = 1; t <= n_; ++t) {
    const double x = static_cast<double>(t) / n_;
    double xp = 1.0;
    for (int k = 0; k <= 2 * degree; ++k) {
      power_[k][t] = power_[k][t - 1] + xp;
      if (k <= degree) response_[k][t] = response_[k][t - 1] + xp * y[t - 1];
      xp *= x;
    }
  }
}

GramSystem MomentAccumulator::gram_system(const Interval& interval) const {
  if (interval.start < 1 || interval.end > n_ ||
      interval.start > interval.end) {
    throw std::invalid_argument("gram_system: interval out of range");
  }
  GramSystem sys;
  sys.interval = interval;
  sys.degree = degree_;
  const int k = degree_ + 1;
  sys.gram.assign(k * k, 0.0);
  sys.moment.assign(k, 0.0);
  const int lo = interval.start - 1;
  const int hi = interval.end;
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const double v = power_[a + b][hi] - power_[a + b][lo];
      sys.gram[a * k + b] = v;
      sys.gram[b * k + a] = v;
    }
    sys.moment[a] = response_[a][hi] - response_[a][lo];
  }
  return sys;
}

std::vector<double> projection_values(const std::vector<double>& y,
                                      const Interval& interval, int degree) {
  const int n = static_cast<int>(y.size());
  if (interval.start < 1 || interval.end > n || interval.start > interval.end) {
    throw std::invalid_argument("projection_values: interval out of range");
  }
  const int m = interval.length();
  if (m <= degree + 1) {
    return std::vector<double>(y.begin() + (interval.start - 1),
                               y.begin() + interval.end);
  }
  int k = 0;
  const std::vector<double> q = detail::orthonormal_basis(m, degree, &k);
  std::vector<double> fitted(m, 0.0);
  for (int j = 0; j < k; ++j) {
    const double* col = q.data() + static_cast<std::size_t>(j) * m;
    double dot = 0.0;
    for (int t = 0; t < m; ++t) dot += col[t] * y[interval.start - 1 + t];
    for (int t = 0; t < m; ++t) fitted[t] += dot * col[t];
  }
  return fitted;
}

double projection_fit_at(const std::vector<double>& y, const Interval& interval,
                         int degree, int i) {
  if (!interval.contains(i)) {
    throw std::invalid_argument("projection_fit_at: index outside interval");
  }
  const int m = interval.length();
  if (m <= degree + 1) return y[i - 1];
  int k = 0;
  const std::vector<double> q = detail::orthonormal_basis(m, degree, &k);
  double value = 0.0;
  for (int j = 0; j < k; ++j) {
    const double* col = q.data() + static_cast<std::size_t>(j) * m;
    double dot = 0.0;
    for (int t = 0; t < m; ++t) dot += col[t] * y[interval.start - 1 + t];
    value += dot * col[i - interval.start];
  }
  return value;
}

double projection_diag_max(int m, int degree) {
  if (m < 1) throw std::invalid_argument("projection_diag_max: m >= 1");
  if (m <= degree + 1) return 1.0;
  int k = 0;
  const std::vector<double> q = detail::orthonormal_basis(m, degree, &k);
  double best = 0.0;
  for (int t = 0; t < m; ++t) {
    double diag = 0.0;
    for (int j = 0; j < k; ++j) {
      const double v = q[static_cast<std::size_t>(j) * m + t];
      diag += v * v;
    }
    best = std::max(best, diag);
  }
  return best;
}

}  // namespace mtf

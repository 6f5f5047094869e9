#pragma once

// Shared numerical kernels for the local polynomial fits. Fits are solved in
// a local coordinate centered at the interval midpoint and scaled to [-1, 1];
// the span is unchanged, only the conditioning. Gram matrices in that
// coordinate depend on the interval length alone and come from closed-form
// integer power sums (degree <= 4, powers <= 8).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mtf::detail {

inline constexpr int kMaxFitDegree = 4;

// sum_{v=1}^{t} v^p for p in [0, 8]; t >= 0.
inline double power_sum(int p, double t) {
  if (t <= 0) return 0.0;
  switch (p) {
    case 0:
      return t;
    case 1:
      return t * (t + 1) / 2.0;
    case 2:
      return t * (t + 1) * (2 * t + 1) / 6.0;
    case 3: {
      const double s = t * (t + 1) / 2.0;
      return s * s;
    }
    case 4:
      return t * (t + 1) * (2 * t + 1) * (3 * t * t + 3 * t - 1) / 30.0;
    case 5: {
      const double t2 = t * t;
      return t2 * (t + 1) * (t + 1) * (2 * t2 + 2 * t - 1) / 12.0;
    }
    case 6: {
      const double t2 = t * t;
      return t * (t + 1) * (2 * t + 1) *
             (3 * t2 * t2 + 6 * t2 * t - 3 * t + 1) / 42.0;
    }
    case 7: {
      const double t2 = t * t;
      return t2 * (t + 1) * (t + 1) *
             (3 * t2 * t2 + 6 * t2 * t - t2 - 4 * t + 2) / 24.0;
    }
    case 8: {
      const double t2 = t * t;
      const double t3 = t2 * t;
      const double t4 = t2 * t2;
      return t * (t + 1) * (2 * t + 1) *
             (5 * t4 * t2 + 15 * t4 * t + 5 * t4 - 15 * t3 - t2 + 9 * t - 3) /
             90.0;
    }
    default:
      throw std::invalid_argument("power_sum: power above 8 unsupported");
  }
}

// sum_{v=a}^{b} v^p over integers, a <= b, either sign.
inline double power_sum_range(int p, long long a, long long b) {
  if (a > b) return 0.0;
  double total = 0.0;
  if (b >= 1) total += power_sum(p, static_cast<double>(b));
  if (a > 1) total -= power_sum(p, static_cast<double>(a - 1));
  if (a <= 0) {
    // v in [a, min(b, 0)]: 0^p contributes for p == 0 only.
    const long long neg_hi = -a;
    const long long neg_lo = b < 0 ? -b : 1;
    if (neg_hi >= neg_lo) {
      const double s = power_sum(p, static_cast<double>(neg_hi)) -
                       power_sum(p, static_cast<double>(neg_lo - 1));
      total += (p % 2 == 0) ? s : -s;
    }
    if (a <= 0 && b >= 0 && p == 0) total += 1.0;
  }
  return total;
}

// sum_{t=1}^{m} (t - (m+1)/2)^p; zero for odd p by symmetry.
inline double centered_power_sum(int p, long long m) {
  if (p % 2 == 1) return 0.0;
  if (p == 0) return static_cast<double>(m);
  if (m % 2 == 1) {
    const long long h = (m - 1) / 2;
    return 2.0 * power_sum(p, static_cast<double>(h));
  }
  // offsets are +-(2k-1)/2 for k = 1..m/2
  const long long h = m / 2;
  const double odd_sum = power_sum(p, static_cast<double>(2 * h)) -
                         std::pow(2.0, p) * power_sum(p, static_cast<double>(h));
  return 2.0 * odd_sum / std::pow(2.0, p);
}

// Gram of the basis ((u - c)/s)^k, k = 0..deg, over an interval of length m
// centered at c; depends only on m. Row-major (deg+1)^2 output.
inline void centered_gram(long long m, int deg, double scale, double* gram) {
  const int k = deg + 1;
  for (int p = 0; p <= 2 * deg; ++p) {
    const double value = centered_power_sum(p, m) / std::pow(scale, p);
    for (int a = std::max(0, p - deg); a <= std::min(deg, p); ++a) {
      gram[a * k + (p - a)] = value;
    }
  }
}

// In-place Cholesky of a k x k row-major symmetric matrix. Fails when a pivot
// drops below tol relative to the largest diagonal entry.
inline bool cholesky(double* a, int k, double tol = 1e-12) {
  double max_diag = 0.0;
  for (int i = 0; i < k; ++i) max_diag = std::max(max_diag, a[i * k + i]);
  if (!(max_diag > 0.0)) return false;
  for (int j = 0; j < k; ++j) {
    double d = a[j * k + j];
    for (int p = 0; p < j; ++p) d -= a[j * k + p] * a[j * k + p];
    if (d <= tol * max_diag) return false;
    const double l = std::sqrt(d);
    a[j * k + j] = l;
    for (int i = j + 1; i < k; ++i) {
      double v = a[i * k + j];
      for (int p = 0; p < j; ++p) v -= a[i * k + p] * a[j * k + p];
      a[i * k + j] = v / l;
    }
  }
  return true;
}

inline void cholesky_solve(const double* l, int k, double* rhs) {
  for (int i = 0; i < k; ++i) {
    double v = rhs[i];
    for (int p = 0; p < i; ++p) v -= l[i * k + p] * rhs[p];
    rhs[i] = v / l[i * k + i];
  }
  for (int i = k - 1; i >= 0; --i) {
    double v = rhs[i];
    for (int p = i + 1; p < k; ++p) v -= l[p * k + i] * rhs[p];
    rhs[i] = v / l[i * k + i];
  }
}

// Solve the centered normal equations for an interval of length m and
// evaluate the fit at local coordinate z (already divided by `scale`).
// `moment` holds sum (u-c)^p y_u / scale^p for p = 0..deg. Falls back to a
// reduced degree if the factorization degenerates; m > deg is assumed.
inline double solve_centered_fit(long long m, int deg, double scale,
                                 const double* moment, double z) {
  double gram[(kMaxFitDegree + 1) * (kMaxFitDegree + 1)];
  double coef[kMaxFitDegree + 1];
  for (int d = deg; d >= 0; --d) {
    const int k = d + 1;
    centered_gram(m, d, scale, gram);
    if (!cholesky(gram, k)) continue;
    for (int p = 0; p < k; ++p) coef[p] = moment[p];
    cholesky_solve(gram, k, coef);
    double value = coef[d];
    for (int p = d - 1; p >= 0; --p) value = value * z + coef[p];
    return value;
  }
  return moment[0] / static_cast<double>(m);  // unreachable for m >= 1
}

inline double binomial(int p, int q) {
  static const double table[9][9] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0},       {1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 2, 1, 0, 0, 0, 0, 0, 0},       {1, 3, 3, 1, 0, 0, 0, 0, 0},
      {1, 4, 6, 4, 1, 0, 0, 0, 0},       {1, 5, 10, 10, 5, 1, 0, 0, 0},
      {1, 6, 15, 20, 15, 6, 1, 0, 0},    {1, 7, 21, 35, 35, 21, 7, 1, 0},
      {1, 8, 28, 56, 70, 56, 28, 8, 1}};
  return table[p][q];
}

// Moments about a new center: given m_q = sum (u - a)^q w_u, produce
// sum (u - c)^p w_u with delta = a - c, for p = 0..deg.
inline void shift_moments(const double* moments, int deg, double delta,
                          double* out) {
  for (int p = deg; p >= 0; --p) {
    double v = 0.0;
    double dpow = 1.0;
    for (int q = p; q >= 0; --q) {
      v += binomial(p, p - q) * dpow * moments[q];
      dpow *= delta;
    }
    out[p] = v;
  }
}

// Values of an orthonormal basis of the degree-deg discrete polynomial space
// on m points, column-major: result[j*m + t] = q_j(t+1). The number of
// columns is min(deg, m-1) + 1.
inline std::vector<double> orthonormal_basis(int m, int deg, int* columns) {
  const int k = std::min(deg, m - 1) + 1;
  *columns = k;
  std::vector<double> q(static_cast<std::size_t>(k) * m);
  const double center = (m + 1) / 2.0;
  const double scale = m > 1 ? m / 2.0 : 1.0;
  for (int j = 0; j < k; ++j) {
    double* col = q.data() + static_cast<std::size_t>(j) * m;
    for (int t = 0; t < m; ++t) {
      col[t] = std::pow((t + 1 - center) / scale, j);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (int p = 0; p < j; ++p) {
        const double* prev = q.data() + static_cast<std::size_t>(p) * m;
        double dot = 0.0;
        for (int t = 0; t < m; ++t) dot += col[t] * prev[t];
        for (int t = 0; t < m; ++t) col[t] -= dot * prev[t];
      }
    }
    double norm = 0.0;
    for (int t = 0; t < m; ++t) norm += col[t] * col[t];
    norm = std::sqrt(norm);
    for (int t = 0; t < m; ++t) col[t] /= norm;
  }
  return q;
}

}  // namespace mtf::detail

#include "mtf/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mtf/polyfit.hpp"
#include "poly_internal.hpp"

namespace mtf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_fit_args(const std::vector<double>& y, int degree) {
  if (y.empty()) throw std::invalid_argument("fit: empty series");
  if (degree < 0 || degree > detail::kMaxFitDegree) {
    throw std::invalid_argument("fit: degree must be in [0, 4]");
  }
}

// Fitted values of the degree-r fit at a fixed index i, for every interval
// [c, d] containing i. Tables are rectangular: row c in [1, i], column d in
// [i, n], flat index (c-1)*width + (d-i).
//
// Moments are accumulated about the anchor i and shifted to the interval
// midpoint before solving, so conditioning stays length-controlled.
class IndexFitTable {
 public:
  void compute(const std::vector<double>& y, int degree, int i) {
    n_ = static_cast<int>(y.size());
    i_ = i;
    degree_ = degree;
    width_ = n_ - i + 1;
    fitted_.assign(static_cast<std::size_t>(i) * width_, 0.0);

    const int k = degree + 1;
    // right[p][d-i] = sum_{u=i..d} (u-i)^p y_u
    right_.assign(k, std::vector<double>(width_, 0.0));
    for (int d = i; d <= n_; ++d) {
      const double v = y[d - 1];
      double offp = 1.0;
      for (int p = 0; p < k; ++p) {
        right_[p][d - i] = (d > i ? right_[p][d - i - 1] : 0.0) + offp * v;
        offp *= static_cast<double>(d - i);
      }
    }
    // left[p][c-1] = sum_{u=c..i-1} (u-i)^p y_u
    left_.assign(k, std::vector<double>(i, 0.0));
    for (int c = i - 1; c >= 1; --c) {
      const double v = y[c - 1];
      double offp = 1.0;
      for (int p = 0; p < k; ++p) {
        left_[p][c - 1] = (c < i - 1 ? left_[p][c] : 0.0) + offp * v;
        offp *= static_cast<double>(c - i);
      }
    }

    double anchored[detail::kMaxFitDegree + 1];
    double centered[detail::kMaxFitDegree + 1];
    for (int c = 1; c <= i; ++c) {
      double* row = fitted_.data() + static_cast<std::size_t>(c - 1) * width_;
      for (int d = i; d <= n_; ++d) {
        const int len = d - c + 1;
        if (len <= degree + 1) {
          row[d - i] = y[i - 1];
          continue;
        }
        const int deg = degree;
        for (int p = 0; p <= deg; ++p) {
          anchored[p] =
              right_[p][d - i] + (c < i ? left_[p][c - 1] : 0.0);
        }
        const double center = (c + d) / 2.0 - i;  // midpoint in anchor coords
        const double scale = len / 2.0;
        detail::shift_moments(anchored, deg, -center, centered);
        double spow = 1.0;
        for (int p = 0; p <= deg; ++p) {
          centered[p] /= spow;
          spow *= scale;
        }
        row[d - i] = detail::solve_centered_fit(len, deg, scale, centered,
                                                -center / scale);
      }
    }
  }

  double at(int c, int d) const {
    return fitted_[static_cast<std::size_t>(c - 1) * width_ + (d - i_)];
  }
  int n() const { return n_; }
  int index() const { return i_; }

 private:
  int n_ = 0, i_ = 0, degree_ = 0, width_ = 0;
  std::vector<double> fitted_;
  std::vector<std::vector<double>> right_, left_;
};

// Inner-max structures for one index. For J = [a, b]:
//   C = +1 candidates are strictly interior intervals, handled by a 2-D
//        corner-max table over (c, d) of fitted -/+ penalty/len;
//   C = 0 candidates touch exactly one endpoint, handled by penalty-free
//        prefix/suffix max arrays per row/column;
//   C = -1 is the single term I = J.
class MinMaxSolver {
 public:
  void prepare(const IndexFitTable& table) {
    table_ = &table;
    const int i = table.index();
    const int n = table.n();
    width_ = n - i + 1;
    rows_ = i;
    row_max_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
    row_min_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
    col_max_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
    col_min_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
    for (int c = 1; c <= rows_; ++c) {
      double running_max = -kInf, running_min = kInf;
      for (int d = i; d <= n; ++d) {
        const double f = table.at(c, d);
        running_max = std::max(running_max, f);
        running_min = std::min(running_min, f);
        cell(row_max_, c, d) = running_max;
        cell(row_min_, c, d) = running_min;
      }
    }
    for (int d = i; d <= n; ++d) {
      double running_max = -kInf, running_min = kInf;
      for (int c = rows_; c >= 1; --c) {
        const double f = table_->at(c, d);
        running_max = std::max(running_max, f);
        running_min = std::min(running_min, f);
        cell(col_max_, c, d) = running_max;
        cell(col_min_, c, d) = running_min;
      }
    }
    corner_max_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
    corner_min_.assign(static_cast<std::size_t>(rows_) * width_, 0.0);
  }

  // (upper_i, lower_i) for one penalty.
  std::pair<double, double> solve(double penalty) {
    const int i = table_->index();
    const int n = table_->n();
    // corner_max(c, d) = max over c' in [c, i], d' in [i, d] of
    // fitted - penalty/len; corner_min the mirror with +penalty/len.
    for (int c = i; c >= 1; --c) {
      for (int d = i; d <= n; ++d) {
        const double f = table_->at(c, d);
        const double shrink = penalty / (d - c + 1);
        double up = f - shrink;
        double dn = f + shrink;
        if (c < i) {
          up = std::max(up, cell(corner_max_, c + 1, d));
          dn = std::min(dn, cell(corner_min_, c + 1, d));
        }
        if (d > i) {
          up = std::max(up, cell(corner_max_, c, d - 1));
          dn = std::min(dn, cell(corner_min_, c, d - 1));
        }
        cell(corner_max_, c, d) = up;
        cell(corner_min_, c, d) = dn;
      }
    }
    double upper = kInf, lower = -kInf;
    for (int a = 1; a <= i; ++a) {
      for (int b = i; b <= n; ++b) {
        const double whole = penalty / (b - a + 1);
        double inner_max = table_->at(a, b) + whole;
        double inner_min = table_->at(a, b) - whole;
        if (a < i && b > i) {
          inner_max = std::max(inner_max, cell(corner_max_, a + 1, b - 1));
          inner_min = std::min(inner_min, cell(corner_min_, a + 1, b - 1));
        }
        if (b - 1 >= i) {  // I = [a, d], d < b: touches the left endpoint
          inner_max = std::max(inner_max, cell(row_max_, a, b - 1));
          inner_min = std::min(inner_min, cell(row_min_, a, b - 1));
        }
        if (a + 1 <= i) {  // I = [c, b], c > a: touches the right endpoint
          inner_max = std::max(inner_max, cell(col_max_, a + 1, b));
          inner_min = std::min(inner_min, cell(col_min_, a + 1, b));
        }
        upper = std::min(upper, inner_max);
        lower = std::max(lower, inner_min);
      }
    }
    return {upper, lower};
  }

 private:
  double& cell(std::vector<double>& t, int c, int d) {
    return t[static_cast<std::size_t>(c - 1) * width_ + (d - table_->index())];
  }

  const IndexFitTable* table_ = nullptr;
  int width_ = 0, rows_ = 0;
  std::vector<double> row_max_, row_min_, col_max_, col_min_;
  std::vector<double> corner_max_, corner_min_;
};

}  // namespace

void apply_point_rule(FitBand& band, PointRule rule) {
  const std::size_t n = band.lower.size();
  band.point.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (rule) {
      case PointRule::midpoint:
        band.point[i] = 0.5 * (band.lower[i] + band.upper[i]);
        break;
      case PointRule::upper:
        band.point[i] = band.upper[i];
        break;
      case PointRule::lower:
        band.point[i] = band.lower[i];
        break;
    }
  }
}

std::vector<FitBand> fit_multi(const std::vector<double>& y,
                               const FitConfig& config,
                               const std::vector<double>& penalties) {
  check_fit_args(y, config.degree);
  if (config.variant != Variant::full) {
    throw std::invalid_argument("fit_multi: full variant expected");
  }
  const int n = static_cast<int>(y.size());
  std::vector<FitBand> bands(penalties.size());
  for (auto& band : bands) {
    band.lower.resize(n);
    band.upper.resize(n);
  }
  IndexFitTable table;
  MinMaxSolver solver;
  for (int i = 1; i <= n; ++i) {
    table.compute(y, config.degree, i);
    solver.prepare(table);
    for (std::size_t k = 0; k < penalties.size(); ++k) {
      const auto [upper, lower] = solver.solve(penalties[k]);
      bands[k].upper[i - 1] = upper;
      bands[k].lower[i - 1] = lower;
    }
  }
  for (auto& band : bands) apply_point_rule(band, config.point_rule);
  return bands;
}

FitBand fit(const std::vector<double>& y, const FitConfig& config) {
  return fit_multi(y, config, {config.penalty})[0];
}

double minmax_upper(const std::vector<double>& y, int degree, double penalty,
                    int i) {
  check_fit_args(y, degree);
  if (i < 1 || i > static_cast<int>(y.size())) {
    throw std::invalid_argument("minmax_upper: index out of range");
  }
  IndexFitTable table;
  table.compute(y, degree, i);
  MinMaxSolver solver;
  solver.prepare(table);
  return solver.solve(penalty).first;
}

double maxmin_lower(const std::vector<double>& y, int degree, double penalty,
                    int i) {
  check_fit_args(y, degree);
  if (i < 1 || i > static_cast<int>(y.size())) {
    throw std::invalid_argument("maxmin_lower: index out of range");
  }
  IndexFitTable table;
  table.compute(y, degree, i);
  MinMaxSolver solver;
  solver.prepare(table);
  return solver.solve(penalty).second;
}

FitBand fit_naive(const std::vector<double>& y, const FitConfig& config) {
  check_fit_args(y, config.degree);
  const int n = static_cast<int>(y.size());
  const double lambda = config.penalty;

  // All interval fits at every contained index, via the orthonormal-basis
  // route (independent of the optimized path's power-sum solves).
  // value(i, c, d): fitted value of [c, d] at i.
  std::vector<std::vector<double>> fits(n);  // fits[c-1][...] per interval
  for (int c = 1; c <= n; ++c) {
    fits[c - 1].reserve(static_cast<std::size_t>(n - c + 1) * 2);
  }
  std::vector<std::vector<std::size_t>> offset(n);
  for (int c = 1; c <= n; ++c) {
    offset[c - 1].resize(n - c + 1);
    for (int d = c; d <= n; ++d) {
      offset[c - 1][d - c] = fits[c - 1].size();
      const std::vector<double> v =
          projection_values(y, {c, d}, config.degree);
      fits[c - 1].insert(fits[c - 1].end(), v.begin(), v.end());
    }
  }
  const auto fit_at = [&](int i, int c, int d) {
    return fits[c - 1][offset[c - 1][d - c] + (i - c)];
  };

  FitBand band;
  band.lower.resize(n);
  band.upper.resize(n);
  for (int i = 1; i <= n; ++i) {
    double upper = kInf, lower = -kInf;
    for (int a = 1; a <= i; ++a) {
      for (int b = i; b <= n; ++b) {
        double inner_max = -kInf, inner_min = kInf;
        for (int c = a; c <= i; ++c) {
          for (int d = i; d <= b; ++d) {
            const int coef = penalty_coefficient({c, d}, {a, b});
            const double f = fit_at(i, c, d);
            const double pen = lambda * coef / (d - c + 1);
            inner_max = std::max(inner_max, f - pen);
            inner_min = std::min(inner_min, f + pen);
          }
        }
        upper = std::min(upper, inner_max);
        lower = std::max(lower, inner_min);
      }
    }
    band.upper[i - 1] = upper;
    band.lower[i - 1] = lower;
  }
  apply_point_rule(band, config.point_rule);
  return band;
}

}  // namespace mtf

#include "mtf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mtf/boundary.hpp"
#include "mtf/dyadic.hpp"
#include "mtf/polyfit.hpp"
#include "poly_internal.hpp"

namespace mtf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::pair<double, double> bias_terms(const std::vector<double>& truth, int i,
                                     const Interval& j, int degree,
                                     BiasRestrict restrict,
                                     const DyadifiedFamily* family) {
  if (!j.contains(i)) {
    throw std::invalid_argument("bias_terms: index outside interval");
  }
  const double base = truth[i - 1];
  double plus = -kInf, minus = kInf;
  if (restrict == BiasRestrict::all) {
    for (int c = j.start; c <= i; ++c) {
      for (int d = i; d <= j.end; ++d) {
        const double v = projection_fit_at(truth, {c, d}, degree, i) - base;
        plus = std::max(plus, v);
        minus = std::min(minus, v);
      }
    }
  } else {
    DyadifiedFamily local;
    if (family == nullptr) {
      local = DyadifiedFamily::build(static_cast<int>(truth.size()));
      family = &local;
    }
    for (int l : family->left_ends(i)) {
      if (l < j.start) break;
      for (int r : family->right_ends(i)) {
        if (r > j.end) break;
        const double v = projection_fit_at(truth, {l, r}, degree, i) - base;
        plus = std::max(plus, v);
        minus = std::min(minus, v);
      }
    }
  }
  return {plus, minus};
}

double effective_noise(const std::vector<double>& noise, int degree,
                       NoiseMode mode, int index,
                       const DyadifiedFamily* family) {
  const int n = static_cast<int>(noise.size());
  if (n == 0) throw std::invalid_argument("effective_noise: empty series");
  double best = 0.0;
  switch (mode) {
    case NoiseMode::global_sup: {
      if (degree == 0) {
        // means via prefix sums
        std::vector<double> prefix(n + 1, 0.0);
        for (int t = 1; t <= n; ++t) prefix[t] = prefix[t - 1] + noise[t - 1];
        for (int m = 1; m <= n; ++m) {
          const double root = std::sqrt(static_cast<double>(m));
          for (int c = 1; c + m - 1 <= n; ++c) {
            const double mean = (prefix[c + m - 1] - prefix[c - 1]) / m;
            best = std::max(best, std::abs(mean) * root);
          }
        }
        return best;
      }
      for (int m = 1; m <= n; ++m) {
        const double root = std::sqrt(static_cast<double>(m));
        if (m <= degree + 1) {
          // projection is the identity
          for (double v : noise) best = std::max(best, std::abs(v) * root);
          continue;
        }
        int k = 0;
        const std::vector<double> q = detail::orthonormal_basis(m, degree, &k);
        std::vector<double> fitted(m);
        for (int c = 1; c + m - 1 <= n; ++c) {
          std::fill(fitted.begin(), fitted.end(), 0.0);
          for (int j = 0; j < k; ++j) {
            const double* col = q.data() + static_cast<std::size_t>(j) * m;
            double dot = 0.0;
            for (int t = 0; t < m; ++t) dot += col[t] * noise[c - 1 + t];
            for (int t = 0; t < m; ++t) fitted[t] += dot * col[t];
          }
          for (int t = 0; t < m; ++t) {
            best = std::max(best, std::abs(fitted[t]) * root);
          }
        }
      }
      return best;
    }
    case NoiseMode::at_index: {
      if (index < 1 || index > n) {
        throw std::invalid_argument("effective_noise: index out of range");
      }
      DyadifiedFamily local;
      if (family == nullptr) {
        local = DyadifiedFamily::build(n);
        family = &local;
      }
      for (const Interval& interval : family->intervals(index)) {
        const double v =
            projection_fit_at(noise, interval, degree, index);
        best = std::max(best,
                        std::abs(v) * std::sqrt(double(interval.length())));
      }
      return best;
    }
    case NoiseMode::boundary: {
      for (int c = 1; c <= n; ++c) {
        const double v = projection_fit_at(noise, {c, n}, degree, n);
        best = std::max(best, std::abs(v) * std::sqrt(double(n - c + 1)));
      }
      return best;
    }
    case NoiseMode::boundary_dyadic: {
      DyadifiedFamily local;
      if (family == nullptr) {
        local = DyadifiedFamily::build(n);
        family = &local;
      }
      for (int l : family->left_ends(n)) {
        const double v = projection_fit_at(noise, {l, n}, degree, n);
        best = std::max(best, std::abs(v) * std::sqrt(double(n - l + 1)));
      }
      return best;
    }
  }
  return best;
}

double se_term(int i, const Interval& j, double penalty, double noise,
               SeMode mode) {
  if (noise < 0) throw std::invalid_argument("se_term: noise >= 0 expected");
  const double len = j.length();
  if (penalty == 0.0 && noise > 0.0) return kInf;
  const double quad = noise > 0.0 ? noise * noise / (4.0 * penalty) : 0.0;
  double se = noise / std::sqrt(len) + quad + penalty / len;
  if (mode == SeMode::interior) {
    se += noise / std::sqrt(static_cast<double>(dist_to_boundary(i, j)));
  }
  return se;
}

double opt_closed_form(double m, double penalty, long long size) {
  if (size < 1) throw std::invalid_argument("opt_closed_form: size >= 1");
  const double root_n = std::sqrt(static_cast<double>(size));
  if (penalty < m / 2.0) return m - penalty;
  if (penalty < m * root_n / 2.0) return m * m / (4.0 * penalty);
  return m / root_n - penalty / size;
}

namespace {

// Table of projected-truth values at one index for every interval inside
// [1, n] containing it; brute force feeding the per-J bias scans.
class BiasTable {
 public:
  BiasTable(const std::vector<double>& truth, int degree, int i)
      : i_(i), n_(static_cast<int>(truth.size())), width_(n_ - i + 1) {
    values_.resize(static_cast<std::size_t>(i) * width_);
    for (int c = 1; c <= i; ++c) {
      for (int d = i; d <= n_; ++d) {
        values_[idx(c, d)] = projection_fit_at(truth, {c, d}, degree, i) -
                             truth[i - 1];
      }
    }
  }
  double at(int c, int d) const { return values_[idx(c, d)]; }

 private:
  std::size_t idx(int c, int d) const {
    return static_cast<std::size_t>(c - 1) * width_ + (d - i_);
  }
  int i_, n_, width_;
  std::vector<double> values_;
};

}  // namespace

std::vector<BoundDiagnostics> verify_deterministic_bound(
    const std::vector<double>& truth, const std::vector<double>& noise,
    const FitConfig& config) {
  if (truth.size() != noise.size()) {
    throw std::invalid_argument("verify_deterministic_bound: size mismatch");
  }
  const int n = static_cast<int>(truth.size());
  std::vector<double> y(n);
  for (int t = 0; t < n; ++t) y[t] = truth[t] + noise[t];

  const int r = config.degree;
  const double lambda = config.penalty;
  const double slack = 1e-9;
  std::vector<BoundDiagnostics> out;

  const DyadifiedFamily family = DyadifiedFamily::build(n);

  if (config.variant == Variant::boundary ||
      config.variant == Variant::boundary_dyadic) {
    const bool dyad = config.variant == Variant::boundary_dyadic;
    const BoundaryFit band = dyad
                                 ? fit_boundary_dyadic(y, r, lambda,
                                                       config.point_rule)
                                 : fit_boundary(y, r, lambda, config.point_rule);
    const double m = effective_noise(
        noise, r, dyad ? NoiseMode::boundary_dyadic : NoiseMode::boundary, n,
        &family);
    BoundDiagnostics diag;
    diag.index = n;
    diag.effective_noise = m;
    double up_bound = kInf, lo_bound = -kInf;
    const auto starts = [&]() {
      std::vector<int> s;
      if (dyad) {
        for (int l : family.left_ends(n)) s.push_back(l);
      } else {
        for (int j = 1; j <= n; ++j) s.push_back(j);
      }
      return s;
    }();
    for (int j0 : starts) {
      const Interval j{j0, n};
      const auto [bp, bm] =
          bias_terms(truth, n, j, r,
                     dyad ? BiasRestrict::dyadified : BiasRestrict::all,
                     &family);
      const double se = se_term(n, j, lambda, m, SeMode::boundary);
      if (bp + se < up_bound) {
        up_bound = bp + se;
        diag.interval = j;
        diag.bias_plus = bp;
        diag.se = se;
      }
      if (bm - se > lo_bound) {
        lo_bound = bm - se;
        diag.bias_minus = bm;
      }
    }
    const double e_up = band.upper - truth[n - 1];
    const double e_lo = band.lower - truth[n - 1];
    diag.upper_ok = e_up <= up_bound + slack;
    diag.lower_ok = e_lo >= lo_bound - slack;
    out.push_back(diag);
    return out;
  }

  const bool dyad = config.variant == Variant::dyadic;
  const FitBand band = dyad ? fit_dyadic(y, config) : fit(y, config);
  const double global_m =
      dyad ? 0.0 : effective_noise(noise, r, NoiseMode::global_sup);

  for (int i = 1; i <= n; ++i) {
    BoundDiagnostics diag;
    diag.index = i;
    const double m =
        dyad ? effective_noise(noise, r, NoiseMode::at_index, i, &family)
             : global_m;
    diag.effective_noise = m;
    double up_bound = kInf, lo_bound = -kInf;
    if (dyad) {
      for (const Interval& j : family.intervals(i)) {
        const auto [bp, bm] =
            bias_terms(truth, i, j, r, BiasRestrict::dyadified, &family);
        const double se = se_term(i, j, lambda, m, SeMode::interior);
        if (bp + se < up_bound) {
          up_bound = bp + se;
          diag.interval = j;
          diag.bias_plus = bp;
          diag.se = se;
        }
        if (bm - se > lo_bound) {
          lo_bound = bm - se;
          diag.bias_minus = bm;
        }
      }
    } else {
      const BiasTable table(truth, r, i);
      for (int a = 1; a <= i; ++a) {
        for (int b = i; b <= n; ++b) {
          double bp = -kInf, bm = kInf;
          for (int c = a; c <= i; ++c) {
            for (int d = i; d <= b; ++d) {
              const double v = table.at(c, d);
              bp = std::max(bp, v);
              bm = std::min(bm, v);
            }
          }
          const Interval j{a, b};
          const double se = se_term(i, j, lambda, m, SeMode::interior);
          if (bp + se < up_bound) {
            up_bound = bp + se;
            diag.interval = j;
            diag.bias_plus = bp;
            diag.se = se;
          }
          if (bm - se > lo_bound) {
            lo_bound = bm - se;
            diag.bias_minus = bm;
          }
        }
      }
    }
    const double e_up = band.upper[i - 1] - truth[i - 1];
    const double e_lo = band.lower[i - 1] - truth[i - 1];
    diag.upper_ok = e_up <= up_bound + slack;
    diag.lower_ok = e_lo >= lo_bound - slack;
    out.push_back(diag);
  }
  return out;
}

double tv_order(const std::vector<double>& theta, int order) {
  const int n = static_cast<int>(theta.size());
  if (order < 1) throw std::invalid_argument("tv_order: order >= 1");
  if (n <= order) throw std::invalid_argument("tv_order: series too short");
  std::vector<double> diff = theta;
  for (int pass = 0; pass < order; ++pass) {
    for (std::size_t t = 0; t + 1 < diff.size(); ++t) {
      diff[t] = diff[t + 1] - diff[t];
    }
    diff.pop_back();
  }
  double l1 = 0.0;
  for (double v : diff) l1 += std::abs(v);
  return std::pow(static_cast<double>(n), order - 1) * l1;
}

namespace {

double piece_tv(const std::vector<double>& theta, const Interval& piece,
                int order) {
  if (piece.length() <= order) return 0.0;
  const std::vector<double> local(theta.begin() + (piece.start - 1),
                                  theta.begin() + piece.end);
  return tv_order(local, order);
}

void partition_rec(const std::vector<double>& theta, int order, double budget,
                   const Interval& piece, std::vector<Interval>& out) {
  if (piece.length() == 1 || piece_tv(theta, piece, order) <= budget) {
    out.push_back(piece);
    return;
  }
  const int mid = piece.start + (piece.end - piece.start) / 2;
  partition_rec(theta, order, budget, {piece.start, mid}, out);
  partition_rec(theta, order, budget, {mid + 1, piece.end}, out);
}

}  // namespace

std::vector<Interval> bv_partition(const std::vector<double>& theta, int order,
                                   double delta) {
  const int n = static_cast<int>(theta.size());
  if (n < 1) throw std::invalid_argument("bv_partition: empty series");
  if (delta <= 0) throw std::invalid_argument("bv_partition: delta > 0");
  const double total = n > order ? tv_order(theta, order) : 0.0;
  std::vector<Interval> out;
  partition_rec(theta, order, total * delta, {1, n}, out);
  return out;
}

}  // namespace mtf

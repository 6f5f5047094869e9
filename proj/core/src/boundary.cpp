#include "mtf/boundary.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mtf/interval.hpp"
#include "poly_internal.hpp"

namespace mtf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fitted value at n of the degree-r fit over each suffix [j, n].
std::vector<double> suffix_fits(const std::vector<double>& y, int degree) {
  const int n = static_cast<int>(y.size());
  std::vector<double> fits(n + 1, 0.0);
  double anchored[detail::kMaxFitDegree + 1] = {0.0};
  double centered[detail::kMaxFitDegree + 1];
  for (int j = n; j >= 1; --j) {
    // extend anchored moments about n: add (j - n)^p y_j
    double offp = 1.0;
    for (int p = 0; p <= degree; ++p) {
      anchored[p] += offp * y[j - 1];
      offp *= static_cast<double>(j - n);
    }
    const int len = n - j + 1;
    if (len <= degree + 1) {
      fits[j] = y[n - 1];
      continue;
    }
    const double center = (j + n) / 2.0;
    const double scale = len / 2.0;
    detail::shift_moments(anchored, degree, n - center, centered);
    double spow = 1.0;
    for (int p = 0; p <= degree; ++p) {
      centered[p] /= spow;
      spow *= scale;
    }
    fits[j] = detail::solve_centered_fit(len, degree, scale, centered,
                                         (n - center) / scale);
  }
  return fits;
}

void set_point(BoundaryFit& fit, PointRule rule) {
  switch (rule) {
    case PointRule::midpoint:
      fit.point = 0.5 * (fit.lower + fit.upper);
      break;
    case PointRule::upper:
      fit.point = fit.upper;
      break;
    case PointRule::lower:
      fit.point = fit.lower;
      break;
  }
}

void check_args(const std::vector<double>& y, int degree) {
  if (y.empty()) throw std::invalid_argument("fit_boundary: empty series");
  if (degree < 0 || degree > detail::kMaxFitDegree) {
    throw std::invalid_argument("fit_boundary: degree must be in [0, 4]");
  }
}

}  // namespace

BoundaryFit fit_boundary(const std::vector<double>& y, int degree,
                         double penalty, PointRule rule) {
  check_args(y, degree);
  const int n = static_cast<int>(y.size());
  const std::vector<double> fits = suffix_fits(y, degree);

  // suffix maxima of fitted -/+ penalty/len over strict subintervals
  std::vector<double> suf_max(n + 2, -kInf), suf_min(n + 2, kInf);
  for (int j = n; j >= 1; --j) {
    const double pen = penalty / (n - j + 1);
    suf_max[j] = std::max(suf_max[j + 1], fits[j] - pen);
    suf_min[j] = std::min(suf_min[j + 1], fits[j] + pen);
  }
  BoundaryFit out;
  out.upper = kInf;
  out.lower = -kInf;
  for (int j = 1; j <= n; ++j) {
    const double pen = penalty / (n - j + 1);
    const double inner_max = std::max(suf_max[j + 1], fits[j] + pen);
    const double inner_min = std::min(suf_min[j + 1], fits[j] - pen);
    out.upper = std::min(out.upper, inner_max);
    out.lower = std::max(out.lower, inner_min);
  }
  set_point(out, rule);
  return out;
}

BoundaryFit fit_boundary_dyadic(const std::vector<double>& y, int degree,
                                double penalty, PointRule rule) {
  check_args(y, degree);
  const int n = static_cast<int>(y.size());
  const DyadifiedFamily family = DyadifiedFamily::build(n);
  const std::vector<double> fits = suffix_fits(y, degree);
  const auto& lefts = family.left_ends(n);  // D_n = { [l, n] : l in L_n }
  const int nl = static_cast<int>(lefts.size());

  BoundaryFit out;
  out.upper = kInf;
  out.lower = -kInf;
  for (int a = 0; a < nl; ++a) {
    double inner_max = -kInf, inner_min = kInf;
    for (int c = 0; c <= a; ++c) {
      const double f = fits[lefts[c]];
      const double pen = penalty / (n - lefts[c] + 1);
      const int coef = (c == a) ? -1 : 1;
      inner_max = std::max(inner_max, f - coef * pen);
      inner_min = std::min(inner_min, f + coef * pen);
    }
    out.upper = std::min(out.upper, inner_max);
    out.lower = std::max(out.lower, inner_min);
  }
  set_point(out, rule);
  return out;
}

BoundaryFit fit_left_boundary(const std::vector<double>& y, int degree,
                              double penalty, PointRule rule) {
  std::vector<double> reversed(y.rbegin(), y.rend());
  return fit_boundary(reversed, degree, penalty, rule);
}

BoundaryFit fit_left_boundary_dyadic(const std::vector<double>& y, int degree,
                                     double penalty, PointRule rule) {
  std::vector<double> reversed(y.rbegin(), y.rend());
  return fit_boundary_dyadic(reversed, degree, penalty, rule);
}

}  // namespace mtf

#include "mtf/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "poly_internal.hpp"

namespace mtf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TreeGramCache::TreeGramCache(const std::vector<double>& y, int degree)
    : n_(static_cast<int>(y.size())), degree_(degree) {
  if (degree < 0 || degree > detail::kMaxFitDegree) {
    throw std::invalid_argument("TreeGramCache: degree must be in [0, 4]");
  }
  if (n_ < 1) throw std::invalid_argument("TreeGramCache: empty series");
  nodes_.reserve(2 * n_);
  build(1, n_);

  const int k = degree + 1;
  // Bottom-up: children precede nothing in index order (parents are created
  // first), so walk the vector backwards.
  for (int id = static_cast<int>(nodes_.size()) - 1; id >= 0; --id) {
    Node& node = nodes_[id];
    node.gram.assign(k * k, 0.0);
    node.moment.assign(k, 0.0);
    node.centered.assign(k, 0.0);
    if (node.left_child < 0) {
      const double x = static_cast<double>(node.start) / n_;
      const double v = y[node.start - 1];
      double xa = 1.0;
      for (int a = 0; a < k; ++a) {
        node.moment[a] = xa * v;
        node.centered[a] = (a == 0) ? v : 0.0;  // u - center = 0 at a leaf
        xa *= x;
      }
      double xp = 1.0;  // gram[a][b] = x^{a+b}
      for (int p = 0; p <= 2 * degree; ++p) {
        for (int a = std::max(0, p - degree); a <= std::min(degree, p); ++a) {
          node.gram[a * k + (p - a)] = xp;
        }
        xp *= x;
      }
      continue;
    }
    const Node& left = nodes_[node.left_child];
    const Node& right = nodes_[node.right_child];
    for (int a = 0; a < k * k; ++a) node.gram[a] = left.gram[a] + right.gram[a];
    for (int a = 0; a < k; ++a) {
      node.moment[a] = left.moment[a] + right.moment[a];
    }
    double shifted[detail::kMaxFitDegree + 1];
    detail::shift_moments(left.centered.data(), degree,
                          left.center - node.center, shifted);
    for (int a = 0; a < k; ++a) node.centered[a] = shifted[a];
    detail::shift_moments(right.centered.data(), degree,
                          right.center - node.center, shifted);
    for (int a = 0; a < k; ++a) node.centered[a] += shifted[a];
  }
}

int TreeGramCache::build(int a, int b) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({});
  nodes_[id].start = a;
  nodes_[id].end = b;
  nodes_[id].center = (a + b) / 2.0;
  if (a < b) {
    const int mid = a + (b - a) / 2;
    const int l = build(a, mid);
    const int r = build(mid + 1, b);
    nodes_[id].left_child = l;
    nodes_[id].right_child = r;
  }
  return id;
}

void TreeGramCache::cover(int node, int lo, int hi,
                          std::vector<int>& out) const {
  const Node& nd = nodes_[node];
  if (lo <= nd.start && nd.end <= hi) {
    out.push_back(node);
    return;
  }
  const int mid = nd.start + (nd.end - nd.start) / 2;
  if (lo <= mid) cover(nd.left_child, lo, hi, out);
  if (hi > mid) cover(nd.right_child, lo, hi, out);
}

GramSystem TreeGramCache::interval_system(const Interval& interval) const {
  if (interval.start < 1 || interval.end > n_ ||
      interval.start > interval.end) {
    throw std::invalid_argument("interval_system: interval out of range");
  }
  std::vector<int> ids;
  cover(0, interval.start, interval.end, ids);
  const int k = degree_ + 1;
  GramSystem sys;
  sys.interval = interval;
  sys.degree = degree_;
  sys.gram.assign(k * k, 0.0);
  sys.moment.assign(k, 0.0);
  for (int id : ids) {
    const Node& node = nodes_[id];
    for (int a = 0; a < k * k; ++a) sys.gram[a] += node.gram[a];
    for (int a = 0; a < k; ++a) sys.moment[a] += node.moment[a];
  }
  return sys;
}

void TreeGramCache::centered_moments(const Interval& interval, double scale,
                                     double* out) const {
  std::vector<int> ids;
  cover(0, interval.start, interval.end, ids);
  const double center = (interval.start + interval.end) / 2.0;
  const int k = degree_ + 1;
  for (int a = 0; a < k; ++a) out[a] = 0.0;
  double shifted[detail::kMaxFitDegree + 1];
  for (int id : ids) {
    const Node& node = nodes_[id];
    detail::shift_moments(node.centered.data(), degree_, node.center - center,
                          shifted);
    for (int a = 0; a < k; ++a) out[a] += shifted[a];
  }
  double spow = 1.0;
  for (int a = 0; a < k; ++a) {
    out[a] /= spow;
    spow *= scale;
  }
}

GramSystem assemble_interval_system(const DyadifiedFamily& family, int i,
                                    int left_end, int right_end,
                                    const TreeGramCache& cache) {
  if (!family.is_member(i, {left_end, right_end})) {
    throw std::invalid_argument(
        "assemble_interval_system: interval not in the dyadified family");
  }
  return cache.interval_system({left_end, right_end});
}

namespace {

// Fitted value at i of the degree-r fit over [l, r], via the tree cache.
double dyadic_fit_at(const TreeGramCache& cache, const std::vector<double>& y,
                     int degree, int i, int l, int r) {
  const int len = r - l + 1;
  if (len <= degree + 1) return y[i - 1];
  const double center = (l + r) / 2.0;
  const double scale = len / 2.0;
  double moment[detail::kMaxFitDegree + 1];
  cache.centered_moments({l, r}, scale, moment);
  return detail::solve_centered_fit(len, degree, scale, moment,
                                    (i - center) / scale);
}

}  // namespace

std::vector<FitBand> fit_dyadic_multi(const std::vector<double>& y,
                                      const FitConfig& config,
                                      const std::vector<double>& penalties) {
  if (y.empty()) throw std::invalid_argument("fit_dyadic: empty series");
  if (config.degree < 0 || config.degree > detail::kMaxFitDegree) {
    throw std::invalid_argument("fit_dyadic: degree must be in [0, 4]");
  }
  if (config.variant != Variant::dyadic) {
    throw std::invalid_argument("fit_dyadic: dyadic variant expected");
  }
  const int n = static_cast<int>(y.size());
  const DyadifiedFamily family = DyadifiedFamily::build(n);
  const TreeGramCache cache(y, config.degree);

  std::vector<FitBand> bands(penalties.size());
  for (auto& band : bands) {
    band.lower.resize(n);
    band.upper.resize(n);
  }

  std::vector<double> fitted;  // [li * nr + ri]
  for (int i = 1; i <= n; ++i) {
    const auto& lefts = family.left_ends(i);
    const auto& rights = family.right_ends(i);
    const int nl = static_cast<int>(lefts.size());
    const int nr = static_cast<int>(rights.size());
    fitted.assign(static_cast<std::size_t>(nl) * nr, 0.0);
    for (int a = 0; a < nl; ++a) {
      for (int b = 0; b < nr; ++b) {
        fitted[static_cast<std::size_t>(a) * nr + b] =
            dyadic_fit_at(cache, y, config.degree, i, lefts[a], rights[b]);
      }
    }
    for (std::size_t kk = 0; kk < penalties.size(); ++kk) {
      const double lambda = penalties[kk];
      double upper = kInf, lower = -kInf;
      // J = [lefts[a], rights[b]]; I = [lefts[c], rights[d]] with c <= a,
      // d <= b (endpoint sets are ordered outward from i).
      for (int a = 0; a < nl; ++a) {
        for (int b = 0; b < nr; ++b) {
          double inner_max = -kInf, inner_min = kInf;
          for (int c = 0; c <= a; ++c) {
            for (int d = 0; d <= b; ++d) {
              const double f = fitted[static_cast<std::size_t>(c) * nr + d];
              int coef = 0;
              if (c == a && d == b) {
                coef = -1;
              } else if (c < a && d < b) {
                coef = 1;
              }
              const double pen =
                  lambda * coef / (rights[d] - lefts[c] + 1);
              inner_max = std::max(inner_max, f - pen);
              inner_min = std::min(inner_min, f + pen);
            }
          }
          upper = std::min(upper, inner_max);
          lower = std::max(lower, inner_min);
        }
      }
      bands[kk].upper[i - 1] = upper;
      bands[kk].lower[i - 1] = lower;
    }
  }
  for (auto& band : bands) apply_point_rule(band, config.point_rule);
  return bands;
}

FitBand fit_dyadic(const std::vector<double>& y, const FitConfig& config) {
  return fit_dyadic_multi(y, config, {config.penalty})[0];
}

}  // namespace mtf

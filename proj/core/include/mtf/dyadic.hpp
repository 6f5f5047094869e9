#pragma once

#include <vector>

#include "mtf/estimator.hpp"
#include "mtf/interval.hpp"
#include "mtf/polyfit.hpp"

namespace mtf {

/// Per-node normal-equation pieces on the binary tree of dyadic intervals,
/// built bottom-up by merging children. Node Grams and moments live in the
/// raw scaled-monomial basis, so parent = left child + right child exactly;
/// fitting additionally keeps midpoint-centered response moments per node
/// for conditioning.
class TreeGramCache {
 public:
  struct Node {
    int start = 0, end = 0;
    int left_child = -1, right_child = -1;
    double center = 0.0;
    std::vector<double> gram;      // (r+1)^2, scaled-monomial basis
    std::vector<double> moment;    // r+1, scaled-monomial basis
    std::vector<double> centered;  // r+1, moments about the node center
  };

  TreeGramCache(const std::vector<double>& y, int degree);

  int size() const { return n_; }
  int degree() const { return degree_; }
  int root() const { return 0; }
  const std::vector<Node>& nodes() const { return nodes_; }

  // Raw-basis system of an arbitrary interval as a sum of O(log n) node
  // contributions.
  GramSystem interval_system(const Interval& interval) const;

  // Response moments about the interval midpoint, scaled: out[p] =
  // sum_{u in I} ((u - c) / scale)^p y_u with c = (start+end)/2.
  void centered_moments(const Interval& interval, double scale,
                        double* out) const;

 private:
  int build(int a, int b);
  void cover(int node, int lo, int hi, std::vector<int>& out) const;

  int n_ = 0;
  int degree_ = 0;
  std::vector<Node> nodes_;
};

// System for [left_end, right_end] assembled from the cache; the pair must
// be a member of D_i.
GramSystem assemble_interval_system(const DyadifiedFamily& family, int i,
                                    int left_end, int right_end,
                                    const TreeGramCache& cache);

// Dyadic-variant fit: per-index min-max over the dyadified family D_i.
FitBand fit_dyadic(const std::vector<double>& y, const FitConfig& config);

std::vector<FitBand> fit_dyadic_multi(const std::vector<double>& y,
                                      const FitConfig& config,
                                      const std::vector<double>& penalties);

}  // namespace mtf

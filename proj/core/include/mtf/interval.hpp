#pragma once

#include <vector>

namespace mtf {

/// Closed discrete index range [start, end], 1-based inclusive.
struct Interval {
  int start = 1;
  int end = 1;

  int length() const { return end - start + 1; }
  bool contains(int i) const { return start <= i && i <= end; }
  bool contains(const Interval& other) const {
    return start <= other.start && other.end <= end;
  }
  bool operator==(const Interval&) const = default;
};

// C_{I,J} in {-1, 0, +1}: +1 when I avoids both endpoints of J, -1 when
// I == J, 0 when I touches exactly one endpoint. Requires I subset of J.
int penalty_coefficient(const Interval& inner, const Interval& outer);

// Two-case coefficient for last-point estimation: +1 when I != J, -1 when
// I == J. Requires I subset of J and both intervals ending at n.
int boundary_penalty_coefficient(const Interval& inner, const Interval& outer,
                                 int n);

// min(i - start + 1, end - i + 1). Requires i in J.
int dist_to_boundary(int i, const Interval& j);

/// Per-index endpoint sets L_i (left, decreasing from i) and R_i (right,
/// increasing from i) built on the binary tree of dyadic intervals over
/// [1, n]. The dyadified family is D_i = { [l, r] : l in L_i, r in R_i }.
///
/// Non-power-of-two n uses the floor-midpoint split convention: a node
/// [a, b] splits into [a, m] and [m+1, b] with m = a + (b-a)/2.
class DyadifiedFamily {
 public:
  static DyadifiedFamily build(int n);

  int size() const { return n_; }

  // Strictly increasing; first element i, last element n.
  const std::vector<int>& right_ends(int i) const { return right_[i]; }
  // Strictly decreasing; first element i, last element 1.
  const std::vector<int>& left_ends(int i) const { return left_[i]; }

  bool is_member(int i, const Interval& interval) const;
  std::vector<Interval> intervals(int i) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
};

// true iff some r in R_i satisfies r <= b and r - i >= (b - i) / 5.
bool covering_factor_check(const DyadifiedFamily& family, int i, int b);

}  // namespace mtf

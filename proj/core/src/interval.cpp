#include "mtf/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtf {

int penalty_coefficient(const Interval& inner, const Interval& outer) {
  if (!outer.contains(inner)) {
    throw std::invalid_argument("penalty_coefficient: I not contained in J");
  }
  if (inner == outer) return -1;
  if (inner.start != outer.start && inner.end != outer.end) return 1;
  return 0;
}

int boundary_penalty_coefficient(const Interval& inner, const Interval& outer,
                                 int n) {
  if (inner.end != n || outer.end != n) {
    throw std::invalid_argument(
        "boundary_penalty_coefficient: intervals must contain n");
  }
  if (!outer.contains(inner)) {
    throw std::invalid_argument(
        "boundary_penalty_coefficient: I not contained in J");
  }
  return inner == outer ? -1 : 1;
}

int dist_to_boundary(int i, const Interval& j) {
  if (!j.contains(i)) {
    throw std::invalid_argument("dist_to_boundary: index outside interval");
  }
  return std::min(i - j.start + 1, j.end - i + 1);
}

namespace {

struct TreeNode {
  int start;
  int end;
  int parent;  // -1 for root
  int depth;
  bool is_left;
};

// Binary tree of dyadic intervals, floor-midpoint splits. Nodes sharing a
// start (or end) position form an ancestor chain with contiguous depths;
// starts_at/ends_at list them shallow to deep.
struct DyadicTree {
  std::vector<TreeNode> nodes;
  std::vector<int> leaf_of;
  std::vector<std::vector<int>> starts_at;
  std::vector<std::vector<int>> ends_at;

  explicit DyadicTree(int n)
      : leaf_of(n + 1, -1), starts_at(n + 2), ends_at(n + 2) {
    nodes.reserve(2 * n);
    build(1, n, -1, true, 0);
  }

  void build(int a, int b, int parent, bool is_left, int depth) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({a, b, parent, depth, is_left});
    starts_at[a].push_back(id);
    ends_at[b].push_back(id);
    if (a == b) {
      leaf_of[a] = id;
    } else {
      const int mid = a + (b - a) / 2;
      build(a, mid, id, true, depth + 1);
      build(mid + 1, b, id, false, depth + 1);
    }
  }

  // Among nodes in `chain` (shallow to deep, contiguous depths), pick the one
  // at `depth` when present, otherwise the closest existing level.
  int at_depth(const std::vector<int>& chain, int depth) const {
    int chosen = chain.front();
    for (int id : chain) {
      if (nodes[id].depth <= depth) {
        chosen = id;
      } else {
        break;
      }
    }
    return chosen;
  }

  // One induction step toward larger indices: `cur` is the node whose right
  // end is the current element r_j. Left child -> parent; right child ->
  // right neighbor of the parent (the node starting just past it).
  int step_right(int cur) const {
    const TreeNode& node = nodes[cur];
    if (node.is_left) return node.parent;
    const TreeNode& parent = nodes[node.parent];
    return at_depth(starts_at[parent.end + 1], parent.depth);
  }

  // Mirror step toward smaller indices for the L_i construction.
  int step_left(int cur) const {
    const TreeNode& node = nodes[cur];
    if (!node.is_left) return node.parent;
    const TreeNode& parent = nodes[node.parent];
    return at_depth(ends_at[parent.start - 1], parent.depth);
  }
};

}  // namespace

DyadifiedFamily DyadifiedFamily::build(int n) {
  if (n < 1) throw std::invalid_argument("DyadifiedFamily: n >= 1 required");
  DyadifiedFamily fam;
  fam.n_ = n;
  fam.right_.resize(n + 1);
  fam.left_.resize(n + 1);

  const DyadicTree tree(n);
  for (int i = 1; i <= n; ++i) {
    auto& right = fam.right_[i];
    right.push_back(i);
    int cur = tree.leaf_of[i];
    while (right.back() != n) {
      cur = tree.step_right(cur);
      right.push_back(tree.nodes[cur].end);
    }

    auto& left = fam.left_[i];
    left.push_back(i);
    cur = tree.leaf_of[i];
    while (left.back() != 1) {
      cur = tree.step_left(cur);
      left.push_back(tree.nodes[cur].start);
    }
  }
  return fam;
}

bool DyadifiedFamily::is_member(int i, const Interval& interval) const {
  if (i < 1 || i > n_ || !interval.contains(i)) return false;
  const auto& left = left_[i];
  const auto& right = right_[i];
  const bool has_left =
      std::find(left.begin(), left.end(), interval.start) != left.end();
  const bool has_right =
      std::find(right.begin(), right.end(), interval.end) != right.end();
  return has_left && has_right;
}

std::vector<Interval> DyadifiedFamily::intervals(int i) const {
  std::vector<Interval> out;
  out.reserve(left_[i].size() * right_[i].size());
  for (int l : left_[i]) {
    for (int r : right_[i]) {
      out.push_back({l, r});
    }
  }
  return out;
}

bool covering_factor_check(const DyadifiedFamily& family, int i, int b) {
  for (int r : family.right_ends(i)) {
    if (r > b) break;
    if (5 * (r - i) >= b - i) return true;
  }
  return false;
}

}  // namespace mtf

#include "mtf/tvd.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mtf {

namespace {

// Piecewise-linear nondecreasing derivative of the forward message,
// maintained as a deque of knots. The line stored with a knot is valid from
// that knot to the next; (left_a, left_b) covers everything before the first
// knot. A lazy offset (add_a, add_b) accumulates the per-point quadratic
// terms so an update is O(1).
struct Knot {
  double x, a, b;
};

class MessageDerivative {
 public:
  explicit MessageDerivative(double y1) : left_a_(1.0), left_b_(-y1) {}

  void add_point(double y) {
    add_a_ += 1.0;
    add_b_ -= y;
  }

  // Truncate at -lam / +lam; returns the clamp interval [lo, hi].
  std::pair<double, double> clamp(double lam) {
    // Left crossing: first t with value >= -lam. Every live piece has true
    // slope >= 1 at clamp time (one quadratic added since the last clamp).
    while (!knots_.empty()) {
      const Knot& k = knots_.front();
      if ((k.a + add_a_) * k.x + (k.b + add_b_) >= -lam) break;
      left_a_ = k.a;
      left_b_ = k.b;
      knots_.pop_front();
    }
    const double la = left_a_ + add_a_;
    const double lb = left_b_ + add_b_;
    const double lo = (-lam - lb) / la;
    knots_.push_front({lo, left_a_, left_b_});
    left_a_ = -add_a_;
    left_b_ = -lam - add_b_;

    // Right crossing: last t with value <= +lam.
    while (!knots_.empty()) {
      const Knot& k = knots_.back();
      if ((k.a + add_a_) * k.x + (k.b + add_b_) <= lam) break;
      knots_.pop_back();
    }
    double ra, rb;
    if (knots_.empty()) {
      ra = left_a_ + add_a_;
      rb = left_b_ + add_b_;
    } else {
      ra = knots_.back().a + add_a_;
      rb = knots_.back().b + add_b_;
    }
    const double hi = (lam - rb) / ra;
    knots_.push_back({hi, -add_a_, lam - add_b_});
    return {lo, hi};
  }

  // Root of the (strictly increasing) final derivative.
  double root() const {
    double a = left_a_ + add_a_;
    double b = left_b_ + add_b_;
    double bound = knots_.empty() ? std::numeric_limits<double>::infinity()
                                  : knots_.front().x;
    std::size_t idx = 0;
    while (true) {
      const double t = -b / a;
      if (t <= bound) return t;
      a = knots_[idx].a + add_a_;
      b = knots_[idx].b + add_b_;
      bound = (idx + 1 < knots_.size())
                  ? knots_[idx + 1].x
                  : std::numeric_limits<double>::infinity();
      ++idx;
    }
  }

 private:
  double left_a_, left_b_;
  double add_a_ = 0.0, add_b_ = 0.0;
  std::deque<Knot> knots_;
};

}  // namespace

std::vector<double> solve_tvd(const std::vector<double>& y, double penalty) {
  if (penalty < 0) throw std::invalid_argument("solve_tvd: penalty >= 0");
  const int n = static_cast<int>(y.size());
  if (n <= 1 || penalty == 0.0) return y;

  std::vector<double> lo(n), hi(n);
  MessageDerivative msg(y[0]);
  for (int k = 2; k <= n; ++k) {
    const auto [l, h] = msg.clamp(penalty);
    lo[k - 2] = l;
    hi[k - 2] = h;
    msg.add_point(y[k - 1]);
  }
  std::vector<double> theta(n);
  theta[n - 1] = msg.root();
  for (int k = n - 1; k >= 1; --k) {
    theta[k - 1] = std::clamp(theta[k], lo[k - 1], hi[k - 1]);
  }
  return theta;
}

double tvd_objective(const std::vector<double>& y, double penalty,
                     const std::vector<double>& theta) {
  double obj = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - theta[i];
    obj += 0.5 * r * r;
  }
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    obj += penalty * std::abs(theta[i + 1] - theta[i]);
  }
  return obj;
}

double kkt_residual(const std::vector<double>& y, double penalty,
                    const std::vector<double>& theta) {
  if (theta.size() != y.size()) {
    throw std::invalid_argument("kkt_residual: size mismatch");
  }
  const int n = static_cast<int>(y.size());
  double scale = 1.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  const double jump_tol = 1e-10 * scale;

  // Stationarity forces u_i = u_{i-1} + theta_i - y_i with u_0 = 0; a valid
  // dual needs |u_i| <= lambda, u_n = 0, and u_i = lambda sign(jump) at
  // every jump of theta.
  double residual = 0.0;
  double u = 0.0;
  for (int i = 1; i <= n; ++i) {
    u += theta[i - 1] - y[i - 1];
    if (i == n) {
      residual = std::max(residual, std::abs(u));
      break;
    }
    residual = std::max(residual, std::abs(u) - penalty);
    const double jump = theta[i] - theta[i - 1];
    if (jump > jump_tol) {
      residual = std::max(residual, std::abs(u - penalty));
    } else if (jump < -jump_tol) {
      residual = std::max(residual, std::abs(u + penalty));
    }
  }
  return std::max(residual, 0.0);
}

}  // namespace mtf

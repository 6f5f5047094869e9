#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "mtf/analysis.hpp"
#include "mtf/rng.hpp"
#include "mtf/signals.hpp"

using namespace mtf;

namespace {

std::vector<double> random_series(int n, unsigned seed, double sd = 1.0) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist(0.0, sd);
  std::vector<double> y(n);
  for (double& v : y) v = dist(gen);
  return y;
}

}  // namespace

TEST_CASE("bias vanishes on in-class polynomials") {
  const int n = 40;
  for (int r : {0, 1, 2}) {
    std::vector<double> truth(n);
    for (int i = 1; i <= n; ++i) {
      const double x = double(i) / n;
      truth[i - 1] = 1.0 + (r >= 1 ? 2.0 * x : 0.0) + (r >= 2 ? -x * x : 0.0);
    }
    for (int i : {1, 7, 20, 40}) {
      const auto [plus, minus] = bias_terms(truth, i, {1, n}, r);
      REQUIRE(std::abs(plus) <= 1e-8);
      REQUIRE(std::abs(minus) <= 1e-8);
    }
  }
}

TEST_CASE("bias at a singleton is zero") {
  const std::vector<double> truth = random_series(12, 3);
  const auto [plus, minus] = bias_terms(truth, 5, {5, 5}, 2);
  CHECK(plus == doctest::Approx(0.0));
  CHECK(minus == doctest::Approx(0.0));
}

TEST_CASE("step signal has positive bias left of the jump") {
  const int n = 16;
  std::vector<double> truth(n, 0.0);
  for (int i = 9; i <= n; ++i) truth[i - 1] = 1.0;
  const auto [plus, minus] = bias_terms(truth, 4, {1, 16}, 0);
  CHECK(plus > 0.0);
  CHECK(minus == doctest::Approx(0.0));  // means never fall below 0 there
  CHECK(plus >= -1e-12);
}

TEST_CASE("effective noise basics") {
  CHECK(effective_noise(std::vector<double>(9, 0.0), 1,
                        NoiseMode::global_sup) == doctest::Approx(0.0));
  const std::vector<double> pm{1.0, -1.0};
  CHECK(effective_noise(pm, 0, NoiseMode::global_sup) == doctest::Approx(1.0));
}

TEST_CASE("effective noise modes agree on simple cases") {
  const std::vector<double> eps = random_series(32, 9);
  const DyadifiedFamily family = DyadifiedFamily::build(32);
  const double global = effective_noise(eps, 0, NoiseMode::global_sup);
  for (int i : {1, 8, 32}) {
    const double local =
        effective_noise(eps, 0, NoiseMode::at_index, i, &family);
    REQUIRE(local <= global + 1e-12);
  }
  const double bdry = effective_noise(eps, 0, NoiseMode::boundary);
  REQUIRE(bdry <= global + 1e-12);
  const double bdry_dy =
      effective_noise(eps, 0, NoiseMode::boundary_dyadic, 32, &family);
  REQUIRE(bdry_dy <= bdry + 1e-12);
}

TEST_CASE("se term plugs the four-part formula") {
  CHECK(se_term(3, {1, 10}, 1.0, 0.0, SeMode::interior) ==
        doctest::Approx(0.1));
  CHECK(se_term(5, {1, 9}, 1.0, 2.0, SeMode::interior) ==
        doctest::Approx(2.0 / std::sqrt(5.0) + 2.0 / 3.0 + 1.0 + 1.0 / 9.0));
  CHECK(se_term(4, {1, 4}, 1.0, 2.0, SeMode::boundary) ==
        doctest::Approx(1.0 + 1.0 + 0.25));
  CHECK(se_term(2, {1, 8}, 0.0, 1.0, SeMode::interior) ==
        std::numeric_limits<double>::infinity());
  CHECK(se_term(2, {1, 8}, 0.0, 0.0, SeMode::interior) == doctest::Approx(0.0));
}

TEST_CASE("opt closed form hits all three regimes") {
  CHECK(opt_closed_form(2.0, 0.5, 100) == doctest::Approx(1.5));
  CHECK(opt_closed_form(2.0, 3.0, 100) == doctest::Approx(1.0 / 3.0));
  CHECK(opt_closed_form(2.0, 50.0, 100) == doctest::Approx(0.2 - 0.5));
}

TEST_CASE("opt closed form matches a grid search") {
  std::mt19937 gen(4);
  std::uniform_real_distribution<double> mdist(0.1, 5.0);
  std::uniform_int_distribution<int> ndist(1, 400);
  for (int trial = 0; trial < 60; ++trial) {
    const double m = mdist(gen);
    const long long size = ndist(gen);
    double lambda = 0.0;
    switch (trial % 3) {
      case 0:
        lambda = 0.49 * m * std::uniform_real_distribution<double>(0, 1)(gen);
        break;
      case 1:
        lambda = m * (0.5 + std::uniform_real_distribution<double>(0, 1)(gen) *
                                0.49 * (std::sqrt(double(size)) - 1.0));
        break;
      default:
        lambda = m * std::sqrt(double(size)) *
                 (0.51 + std::uniform_real_distribution<double>(0, 1)(gen));
        break;
    }
    const double lo = 1.0 / std::sqrt(double(size));
    double grid_best = -1e300;
    const int kPoints = 200000;
    for (int p = 0; p <= kPoints; ++p) {
      const double a = lo + (1.0 - lo) * p / kPoints;
      grid_best = std::max(grid_best, m * a - lambda * a * a);
    }
    const double closed = opt_closed_form(m, lambda, size);
    REQUIRE(std::abs(closed - grid_best) <= 1e-6);
    if (lambda > 0) REQUIRE(closed <= m * m / (4 * lambda) + 1e-12);
  }
}

TEST_CASE("deterministic bound verdicts on random instances") {
  std::mt19937 gen(15);
  std::uniform_int_distribution<int> len(4, 48);
  const double lambdas[] = {0.1, 1.0, 10.0};
  for (int trial = 0; trial < 12; ++trial) {
    const int n = len(gen);
    const int r = trial % 3;
    const std::vector<double> truth = random_series(n, 40 + trial, 2.0);
    const std::vector<double> noise = random_series(n, 400 + trial, 0.5);
    for (Variant variant :
         {Variant::full, Variant::dyadic, Variant::boundary}) {
      FitConfig cfg;
      cfg.degree = r;
      cfg.penalty = lambdas[trial % 3];
      cfg.variant = variant;
      const auto diags = verify_deterministic_bound(truth, noise, cfg);
      for (const auto& d : diags) {
        REQUIRE(d.lower_ok);
        REQUIRE(d.upper_ok);
      }
    }
  }
}

TEST_CASE("bounds hold with slack when the truth is in class and noiseless") {
  const int n = 24;
  std::vector<double> truth(n);
  for (int i = 1; i <= n; ++i) truth[i - 1] = 0.5 + 2.0 * i / n;
  const std::vector<double> noise(n, 0.0);
  FitConfig cfg;
  cfg.degree = 1;
  cfg.penalty = 1.0;
  cfg.variant = Variant::full;
  const auto diags = verify_deterministic_bound(truth, noise, cfg);
  for (const auto& d : diags) {
    REQUIRE(d.lower_ok);
    REQUIRE(d.upper_ok);
    REQUIRE(d.effective_noise == doctest::Approx(0.0));
    REQUIRE(std::abs(d.bias_plus) <= 1e-8);
  }
}

TEST_CASE("effective noise grows no faster than sqrt(log n)") {
  // slope of log(median M^2) against log(log n); M^2 ~ C_r^2 log n gives 1
  for (int r : {0, 1}) {
    const std::vector<int> sizes =
        r == 0 ? std::vector<int>{64, 128, 256, 512}
               : std::vector<int>{48, 96, 192};
    std::vector<double> logx, logy;
    for (int n : sizes) {
      std::vector<double> draws;
      for (int d = 0; d < 200; ++d) {
        CounterRng rng(CounterRng::derive(7000 + 31 * n, d));
        std::vector<double> eps(n);
        for (double& v : eps) v = rng.normal();
        draws.push_back(effective_noise(eps, r, NoiseMode::global_sup));
      }
      std::nth_element(draws.begin(), draws.begin() + draws.size() / 2,
                       draws.end());
      const double med = draws[draws.size() / 2];
      logx.push_back(std::log(std::log(double(n))));
      logy.push_back(std::log(med * med));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = logx.size();
    for (std::size_t t = 0; t < logx.size(); ++t) {
      sx += logx[t];
      sy += logy[t];
      sxx += logx[t] * logx[t];
      sxy += logx[t] * logy[t];
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    CHECK(slope <= 1.3);
  }
}

TEST_CASE("rth order total variation") {
  CHECK(tv_order(std::vector<double>(9, 4.2), 1) == doctest::Approx(0.0));
  std::vector<double> ramp(12);
  for (int i = 0; i < 12; ++i) ramp[i] = i + 1;
  CHECK(tv_order(ramp, 1) == doctest::Approx(11.0));
  CHECK(tv_order(ramp, 2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(tv_order(std::vector<double>{1.0, 2.0}, 2),
                  std::invalid_argument);
}

TEST_CASE("tv subadditivity across interval partitions") {
  SignalSpec spec;
  spec.kind = SignalKind::doppler;
  spec.n = 128;
  const std::vector<double> theta = evaluate_signal(spec);
  const int n = spec.n;
  for (int r : {1, 2}) {
    const double total = tv_order(theta, r);
    std::mt19937 gen(100 + r);
    for (int trial = 0; trial < 10; ++trial) {
      // random interval partition
      std::vector<int> cuts{0, n};
      std::uniform_int_distribution<int> pick(1, n - 1);
      for (int c = 0; c < 6; ++c) cuts.push_back(pick(gen));
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      double sum = 0.0;
      for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const int a = cuts[p] + 1, b = cuts[p + 1];
        if (b - a + 1 <= r) continue;
        const std::vector<double> piece(theta.begin() + (a - 1),
                                        theta.begin() + b);
        // global-n scaling per piece
        sum += std::pow(double(n), r - 1) *
               (tv_order(piece, r) / std::pow(double(b - a + 1), r - 1));
      }
      REQUIRE(sum <= total + 1e-9);
    }
  }
}

TEST_CASE("bv partition trivial cases") {
  const std::vector<double> flat(40, 1.0);
  const auto whole = bv_partition(flat, 1, 0.25);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == Interval{1, 40});

  SignalSpec spec;
  spec.kind = SignalKind::doppler;
  spec.n = 64;
  const std::vector<double> theta = evaluate_signal(spec);
  const auto root = bv_partition(theta, 1, 1.0);
  REQUIRE(root.size() == 1);
}

TEST_CASE("bv partition leaves satisfy the variation budget") {
  SignalSpec spec;
  spec.kind = SignalKind::doppler;
  spec.n = 256;
  const std::vector<double> theta = evaluate_signal(spec);
  const double delta = 0.1;
  const double total = tv_order(theta, 1);
  const auto pieces = bv_partition(theta, 1, delta);
  REQUIRE(pieces.size() > 1);
  int covered = 0;
  for (const Interval& piece : pieces) {
    covered += piece.length();
    if (piece.length() <= 1) continue;
    const std::vector<double> local(theta.begin() + (piece.start - 1),
                                    theta.begin() + piece.end);
    REQUIRE(tv_order(local, 1) <= total * delta + 1e-12);
  }
  REQUIRE(covered == spec.n);
  // partition size should scale like delta^{-1/r}; generous factor
  CHECK(pieces.size() <= 64);
}

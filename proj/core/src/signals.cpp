#include "mtf/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtf/rng.hpp"

namespace mtf {

double CounterRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

SignalKind parse_signal_kind(const std::string& name) {
  if (name == "smooth") return SignalKind::smooth;
  if (name == "doppler") return SignalKind::doppler;
  if (name == "discont") return SignalKind::discont;
  if (name == "pwpoly") return SignalKind::pwpoly;
  if (name == "custom") return SignalKind::custom;
  throw std::invalid_argument("unknown signal kind: " + name);
}

namespace {

double pwpoly_value(const SignalSpec& spec, double x) {
  // Deterministic piecewise polynomial: `pieces` equal pieces, each a
  // degree-`piece_degree` polynomial in the local coordinate with small
  // fixed coefficients; adjacent pieces get distinct levels.
  const int k = spec.pieces;
  int piece = static_cast<int>(x * k);
  if (piece >= k) piece = k - 1;
  const double local = x * k - piece;  // in [0, 1)
  static const double levels[] = {0.0, 2.0, -1.0, 1.0, 3.0, -2.0, 0.5, 2.5};
  double value = levels[piece % 8];
  double coef = 1.5;
  double lp = local;
  for (int q = 1; q <= spec.piece_degree; ++q) {
    value += coef * lp;
    coef = -coef * 0.5;
    lp *= local;
  }
  return value;
}

}  // namespace

std::vector<double> evaluate_signal(const SignalSpec& spec) {
  if (spec.kind == SignalKind::custom) {
    if (static_cast<int>(spec.custom.size()) != spec.n) {
      throw std::invalid_argument("custom signal length mismatch");
    }
    return spec.custom;
  }
  if (spec.n < 1) throw std::invalid_argument("signal length >= 1 required");
  std::vector<double> theta(spec.n);
  constexpr double pi = std::numbers::pi;
  for (int i = 1; i <= spec.n; ++i) {
    const double x = static_cast<double>(i) / spec.n;
    switch (spec.kind) {
      case SignalKind::smooth:
        theta[i - 1] = std::sin(5.0 * pi * x) + 0.5 * std::cos(4.0 * pi * x) + 2.0;
        break;
      case SignalKind::doppler:
        theta[i - 1] = std::sin(4.0 / x) + 1.5;
        break;
      case SignalKind::discont:
        theta[i - 1] = x <= 0.5 ? 100.0 * x * x * x
                                : 100.0 * (x - 0.5) * (x - 0.5) * (x - 0.5);
        break;
      case SignalKind::pwpoly:
        theta[i - 1] = pwpoly_value(spec, x);
        break;
      case SignalKind::custom:
        break;
    }
  }
  return theta;
}

std::pair<std::vector<double>, std::vector<double>> simulate(
    const SignalSpec& spec, double sigma, std::uint64_t seed) {
  if (sigma < 0) throw std::invalid_argument("simulate: sigma >= 0");
  std::vector<double> truth = evaluate_signal(spec);
  std::vector<double> y = truth;
  CounterRng rng(seed);
  for (double& v : y) v += sigma * rng.normal();
  return {std::move(truth), std::move(y)};
}

}  // namespace mtf

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mtf {

enum class SignalKind { smooth, doppler, discont, pwpoly, custom };

struct SignalSpec {
  SignalKind kind = SignalKind::smooth;
  int n = 1024;
  int pieces = 4;        // pwpoly only
  int piece_degree = 0;  // pwpoly only
  std::vector<double> custom;
};

SignalKind parse_signal_kind(const std::string& name);

// Evaluations on the grid x_i = i/n, i = 1..n.
std::vector<double> evaluate_signal(const SignalSpec& spec);

// (truth, truth + gaussian noise); deterministic given seed.
std::pair<std::vector<double>, std::vector<double>> simulate(
    const SignalSpec& spec, double sigma, std::uint64_t seed);

}  // namespace mtf

#include <benchmark/benchmark.h>

#include <vector>

#include "mtf/boundary.hpp"
#include "mtf/dyadic.hpp"
#include "mtf/estimator.hpp"
#include "mtf/rng.hpp"
#include "mtf/tvd.hpp"

namespace {

std::vector<double> noisy(int n) {
  mtf::CounterRng rng(97 + n);
  std::vector<double> y(n);
  for (double& v : y) v = rng.normal();
  return y;
}

void BM_FitDyadic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  const std::vector<double> y = noisy(n);
  const mtf::FitConfig cfg{degree, 25.0, mtf::Variant::dyadic};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::fit_dyadic(y, cfg));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FitDyadic)
    ->Args({256, 0})
    ->Args({1024, 0})
    ->Args({4096, 0})
    ->Args({256, 3})
    ->Args({1024, 3})
    ->Args({4096, 3})
    ->Unit(benchmark::kMillisecond);

void BM_FitFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> y = noisy(n);
  const mtf::FitConfig cfg{2, 5.0, mtf::Variant::full};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::fit(y, cfg));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FitFull)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FitBoundary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> y = noisy(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::fit_boundary(y, 3, 25.0));
  }
}
BENCHMARK(BM_FitBoundary)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_SolveTvd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> y = noisy(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::solve_tvd(y, 1.5));
  }
}
BENCHMARK(BM_SolveTvd)->Arg(1024)->Arg(16384)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "mtf/cross_validation.hpp"
#include "mtf/csv.hpp"
#include "mtf/experiment.hpp"
#include "mtf/rng.hpp"
#include "mtf/signals.hpp"

using namespace mtf;

TEST_CASE("signal formulas at checkpoints") {
  SignalSpec spec;
  spec.kind = SignalKind::smooth;
  spec.n = 10;
  const std::vector<double> smooth = evaluate_signal(spec);
  CHECK(smooth[4] == doctest::Approx(3.5));  // x = 0.5

  spec.kind = SignalKind::discont;
  spec.n = 1024;
  const std::vector<double> discont = evaluate_signal(spec);
  CHECK(discont[511] == doctest::Approx(12.5));  // x = 0.5
  CHECK(std::abs(discont[512]) <= 1e-6);         // jump to ~0 just past 0.5

  spec.kind = SignalKind::doppler;
  spec.n = 4;
  const std::vector<double> doppler = evaluate_signal(spec);
  CHECK(doppler[3] == doctest::Approx(std::sin(4.0) + 1.5));
}

TEST_CASE("simulation is deterministic and noiseless at sigma zero") {
  SignalSpec spec;
  spec.kind = SignalKind::smooth;
  spec.n = 64;
  const auto [truth, clean] = simulate(spec, 0.0, 42);
  CHECK(clean == truth);
  const auto [t1, y1] = simulate(spec, 0.3, 42);
  const auto [t2, y2] = simulate(spec, 0.3, 42);
  CHECK(y1 == y2);
  const auto [t3, y3] = simulate(spec, 0.3, 43);
  CHECK(y1 != y3);
}

TEST_CASE("counter rng moments look gaussian") {
  CounterRng rng(7);
  double sum = 0.0, sumsq = 0.0;
  const int k = 20000;
  for (int i = 0; i < k; ++i) {
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  CHECK(std::abs(sum / k) < 0.05);
  CHECK(std::abs(sumsq / k - 1.0) < 0.05);
}

TEST_CASE("mse definition") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{0.0, 2.0, 5.0};
  CHECK(mean_squared_error(a, b) == doctest::Approx((1.0 + 0.0 + 4.0) / 3.0));
}

TEST_CASE("single-penalty grid returns that penalty") {
  SignalSpec spec;
  spec.kind = SignalKind::smooth;
  spec.n = 48;
  const auto [truth, y] = simulate(spec, 0.3, 5);
  CvOptions options;
  options.degree = 0;
  options.variant = Variant::dyadic;
  options.lambda_grid = {2.5};
  const CvResult result = cross_validate(y, options);
  CHECK(result.best_lambda == doctest::Approx(2.5));
  CHECK(result.scores.size() == 1);
}

TEST_CASE("cv scores are deterministic and stay on the grid") {
  SignalSpec spec;
  spec.kind = SignalKind::doppler;
  spec.n = 64;
  const auto [truth, y] = simulate(spec, 0.3, 11);
  CvOptions options;
  options.degree = 1;
  options.variant = Variant::dyadic;
  options.lambda_grid = {0.0, 0.5, 1.0, 2.0, 4.0};
  const CvResult a = cross_validate(y, options);
  const CvResult b = cross_validate(y, options);
  CHECK(a.scores == b.scores);
  CHECK(std::count(options.lambda_grid.begin(), options.lambda_grid.end(),
                   a.best_lambda) == 1);
}

TEST_CASE("constant truth prefers the larger penalty") {
  SignalSpec spec;
  spec.kind = SignalKind::custom;
  spec.n = 64;
  spec.custom.assign(64, 1.0);
  CvOptions options;
  options.degree = 0;
  options.variant = Variant::dyadic;
  options.lambda_grid = {0.01, 25.0};
  int larger = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto [truth, y] =
        simulate(spec, 0.5, CounterRng::derive(99, rep));
    const CvResult result = cross_validate(y, options);
    if (result.best_lambda == 25.0) ++larger;
  }
  CHECK(larger > 10);
}

TEST_CASE("experiment rows are reproducible byte for byte") {
  ExperimentConfig config;
  config.signal.kind = SignalKind::smooth;
  config.signal.n = 64;
  config.sigma = 0.3;
  config.seed = 17;
  config.degree = 1;
  config.lambda_grid = {0.0, 1.0, 5.0};
  config.replications = 3;
  config.variant = Variant::dyadic;
  const ExperimentResult first = run_experiment(config);
  const ExperimentResult second = run_experiment(config);
  std::ostringstream a, b;
  write_experiment_csv(a, first);
  write_experiment_csv(b, second);
  CHECK(a.str() == b.str());
  CHECK(first.rows.size() == 3);
  for (const auto& row : first.rows) {
    CHECK(std::count(config.lambda_grid.begin(), config.lambda_grid.end(),
                     row.lambda_selected) == 1);
  }
}

TEST_CASE("noiseless in-class experiment has near-zero error") {
  ExperimentConfig config;
  config.signal.kind = SignalKind::custom;
  config.signal.n = 32;
  config.signal.custom.assign(32, 2.0);
  config.sigma = 0.0;
  config.seed = 3;
  config.degree = 0;
  config.lambda_grid = {0.5};
  config.replications = 1;
  config.variant = Variant::full;
  const ExperimentResult result = run_experiment(config);
  CHECK(result.mean_mse <= 1e-16);
}

TEST_CASE("csv formats floats with 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  const double v = 0.12345678901234567;
  std::ostringstream out;
  out << format_double(v);
  CHECK(std::stod(out.str()) == v);
}

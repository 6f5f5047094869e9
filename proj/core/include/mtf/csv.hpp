#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mtf/analysis.hpp"
#include "mtf/estimator.hpp"
#include "mtf/experiment.hpp"

namespace mtf {

// All floats are emitted with 17 significant digits.
std::string format_double(double value);

void write_fit_csv(std::ostream& out, const std::vector<double>& y,
                   const FitBand& band,
                   const std::vector<double>* truth = nullptr);

void write_experiment_csv(std::ostream& out, const ExperimentResult& result);

void write_bounds_csv(std::ostream& out,
                      const std::vector<BoundDiagnostics>& diagnostics,
                      const std::vector<double>& errors);

void write_simulation_csv(std::ostream& out, const std::vector<double>& truth,
                          const std::vector<double>& y);

}  // namespace mtf

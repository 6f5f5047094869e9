#include "mtf/csv.hpp"

#include <cstdio>

namespace mtf {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_fit_csv(std::ostream& out, const std::vector<double>& y,
                   const FitBand& band, const std::vector<double>* truth) {
  out << "index,y,lower,upper,point" << (truth ? ",truth" : "") << "\n";
  for (std::size_t i = 0; i < y.size(); ++i) {
    out << (i + 1) << ',' << format_double(y[i]) << ','
        << format_double(band.lower[i]) << ',' << format_double(band.upper[i])
        << ',' << format_double(band.point[i]);
    if (truth) out << ',' << format_double((*truth)[i]);
    out << '\n';
  }
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& result) {
  out << "rep,lambda_selected,mse\n";
  for (const ExperimentRow& row : result.rows) {
    out << row.rep << ',' << format_double(row.lambda_selected) << ','
        << format_double(row.mse) << '\n';
  }
}

void write_bounds_csv(std::ostream& out,
                      const std::vector<BoundDiagnostics>& diagnostics,
                      const std::vector<double>& errors) {
  out << "index,bias_plus,bias_minus,se,error,lower_ok,upper_ok\n";
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    const BoundDiagnostics& d = diagnostics[i];
    out << d.index << ',' << format_double(d.bias_plus) << ','
        << format_double(d.bias_minus) << ',' << format_double(d.se) << ','
        << format_double(errors[i]) << ',' << (d.lower_ok ? 1 : 0) << ','
        << (d.upper_ok ? 1 : 0) << '\n';
  }
}

void write_simulation_csv(std::ostream& out, const std::vector<double>& truth,
                          const std::vector<double>& y) {
  out << "index,truth,y\n";
  for (std::size_t i = 0; i < truth.size(); ++i) {
    out << (i + 1) << ',' << format_double(truth[i]) << ','
        << format_double(y[i]) << '\n';
  }
}

}  // namespace mtf

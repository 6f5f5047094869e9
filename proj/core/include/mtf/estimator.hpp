#pragma once

#include <vector>

#include "mtf/interval.hpp"

namespace mtf {

enum class Variant { full, dyadic, boundary, boundary_dyadic };
enum class PointRule { midpoint, upper, lower };

struct FitConfig {
  int degree = 0;
  double penalty = 0.0;
  Variant variant = Variant::full;
  PointRule point_rule = PointRule::midpoint;
};

/// Per-index band: maxmin lower, minmax upper, and the selected point
/// estimate. lower_i <= upper_i always (well posedness).
struct FitBand {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> point;
};

// min over J containing i of max over I within J containing i of
// fit_I(i) - penalty * C_{I,J} / |I|.
double minmax_upper(const std::vector<double>& y, int degree, double penalty,
                    int i);

// Dual side; equals -minmax_upper(-y, degree, penalty, i).
double maxmin_lower(const std::vector<double>& y, int degree, double penalty,
                    int i);

// Optimized full-variant fit, O(n^3) over the whole series.
FitBand fit(const std::vector<double>& y, const FitConfig& config);

// Reference transcription of the definition, O(n^5); test oracle.
FitBand fit_naive(const std::vector<double>& y, const FitConfig& config);

// Bands for several penalties sharing one fitted-value precomputation.
std::vector<FitBand> fit_multi(const std::vector<double>& y,
                               const FitConfig& config,
                               const std::vector<double>& penalties);

void apply_point_rule(FitBand& band, PointRule rule);

}  // namespace mtf

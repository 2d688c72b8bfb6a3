#pragma once

#include <span>
#include <vector>

namespace multibump {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  double slope_stderr = 0.0;
};

/// Least-squares straight line through (x_i, y_i).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log|y| against log|x| (entries with y<=0 skipped).
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

/// Aitken delta-squared extrapolation of a geometrically convergent sequence;
/// returns the accelerated last value.
double aitken(std::span<const double> seq);

}  // namespace multibump

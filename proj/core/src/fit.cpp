#include "multibump/fit.hpp"

#include <cmath>

#include "multibump/errors.hpp"

namespace multibump {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) throw ConfigInvalid("fit_line: need >=2 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  const double det = dn * sxx - sx * sx;
  if (det == 0.0) throw ConfigInvalid("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = (dn * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / dn;
  double ss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.slope * x[i] - f.intercept;
    ss += r * r;
  }
  f.rms_residual = std::sqrt(ss / dn);
  if (n > 2) f.slope_stderr = std::sqrt(ss / (dn - 2.0) * dn / det);
  return f;
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx, ly;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  return fit_line(lx, ly);
}

double aitken(std::span<const double> seq) {
  if (seq.size() < 3) throw ConfigInvalid("aitken: need >=3 terms");
  const size_t n = seq.size();
  const double d1 = seq[n - 1] - seq[n - 2];
  const double d2 = seq[n - 2] - seq[n - 3];
  const double denom = d1 - d2;
  if (denom == 0.0) return seq[n - 1];
  return seq[n - 1] - d1 * d1 / denom;
}

}  // namespace multibump

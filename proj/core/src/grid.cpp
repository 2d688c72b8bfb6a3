#include "multibump/grid.hpp"

#include <cmath>

namespace multibump {

Grid2D::Grid2D(double xm, double zm, double hx_target, double hz_target) {
  if (xm <= 0 || zm <= 0 || hx_target <= 0 || hz_target <= 0)
    throw ConfigInvalid("Grid2D: extents and spacings must be positive");
  x_max = xm;
  z_max = zm;
  nx = 2 * static_cast<int>(std::ceil(xm / hx_target)) + 1;
  nz = static_cast<int>(std::ceil(zm / hz_target)) + 1;
}

double Field2D::max_abs() const {
  double m = 0.0;
  for (double a : v) m = std::max(m, std::abs(a));
  return m;
}

bool Field2D::all_finite() const {
  for (double a : v)
    if (!std::isfinite(a)) return false;
  return true;
}

}  // namespace multibump

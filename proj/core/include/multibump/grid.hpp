#pragma once

#include <vector>

#include "multibump/errors.hpp"

namespace multibump {

/// Uniform rectangle [-x_max, x_max] x [0, z_max]; fields on it are extended
/// to z<0 by evenness.
struct Grid2D {
  double x_max = 0.0;
  double z_max = 0.0;
  int nx = 0;  // points along x, spacing hx = 2 x_max / (nx-1)
  int nz = 0;  // points along z, spacing hz = z_max / (nz-1)

  Grid2D() = default;
  Grid2D(double xm, double zm, double hx_target, double hz_target);

  double hx() const { return 2.0 * x_max / (nx - 1); }
  double hz() const { return nz > 1 ? z_max / (nz - 1) : 1.0; }
  double x(int i) const { return -x_max + hx() * i; }
  double z(int j) const { return hz() * j; }
  long size() const { return static_cast<long>(nx) * nz; }
};

struct Field2D {
  Grid2D grid;
  std::vector<double> v;  // x-fastest: v[j*nx + i]

  Field2D() = default;
  explicit Field2D(const Grid2D& g) : grid(g), v(g.size(), 0.0) {}

  double& at(int i, int j) { return v[static_cast<size_t>(j) * grid.nx + i]; }
  double at(int i, int j) const { return v[static_cast<size_t>(j) * grid.nx + i]; }
  double* row(int j) { return v.data() + static_cast<size_t>(j) * grid.nx; }
  const double* row(int j) const { return v.data() + static_cast<size_t>(j) * grid.nx; }

  double max_abs() const;
  bool all_finite() const;
};

}  // namespace multibump

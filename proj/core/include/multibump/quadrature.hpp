#pragma once

#include <functional>

namespace multibump {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 40;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
/// Bisects panels until the embedded error estimate meets
/// max(abs_tol, rel_tol*|I|); throws QuadratureNotConverged when the
/// depth limit is hit with the estimate still above tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Integral over [-L, L] of an exponentially decaying integrand.
double integrate_symmetric(const std::function<double(double)>& f, double L,
                           const QuadratureSpec& spec = {});

/// Cumulative integral of uniformly sampled values: out[i] = ∫_{x0}^{x_i} f.
/// Composite Simpson on interior pairs, one half-panel Newton-Cotes correction
/// at odd indices; O(h^4) globally.
void cumulative_integral(const double* f, int n, double h, double* out);

}  // namespace multibump

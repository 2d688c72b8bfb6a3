#include "multibump/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "multibump/errors.hpp"

namespace multibump {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  return {resk * h, std::abs(resk - resg) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             const QuadratureSpec& spec, double whole_estimate, int depth) {
  PanelResult r = gk15(f, a, b);
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::abs(whole_estimate));
  // Panel tolerance scaled by panel fraction keeps the global error bounded.
  const double panel_tol = tol * std::max(1e-3, std::abs(b - a));
  if (r.error <= panel_tol || r.error <= spec.abs_tol) return r.integral;
  if (depth >= spec.max_depth)
    throw QuadratureNotConverged("adaptive quadrature stalled on [" +
                                 std::to_string(a) + ", " + std::to_string(b) +
                                 "], error " + std::to_string(r.error));
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, spec, whole_estimate, depth + 1) +
         adapt(f, c, b, spec, whole_estimate, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (a == b) return 0.0;
  PanelResult first = gk15(f, a, b);
  if (first.error <= std::max(spec.abs_tol,
                              spec.rel_tol * std::abs(first.integral)))
    return first.integral;
  // Normalize panel scale so the recursion tolerance is per unit length.
  const double len = std::abs(b - a);
  QuadratureSpec s = spec;
  s.abs_tol = spec.abs_tol / std::max(1.0, len);
  return adapt(f, a, b, s, first.integral, 0);
}

double integrate_symmetric(const std::function<double(double)>& f, double L,
                           const QuadratureSpec& spec) {
  // Split at 0 so even/odd structure is resolved exactly.
  return integrate(f, -L, 0.0, spec) + integrate(f, 0.0, L, spec);
}

void cumulative_integral(const double* f, int n, double h, double* out) {
  out[0] = 0.0;
  if (n < 2) return;
  if (n == 2) {
    out[1] = 0.5 * h * (f[0] + f[1]);
    return;
  }
  for (int i = 1; i < n; ++i) {
    if (i == 1) {
      // quadratic through f0,f1,f2 integrated over the first panel
      out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    } else {
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    }
  }
  // second pass for odd-step endpoints beyond the first
  for (int i = 3; i < n; i += 2) {
    out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i - 1] - f[i - 2]);
  }
}

}  // namespace multibump

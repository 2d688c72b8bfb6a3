#include "multibump/tridiag.hpp"

#include <cmath>
#include <limits>

#include "multibump/errors.hpp"

namespace multibump {

int eigen_count_below(const Tridiag& T, double sigma) {
  const int n = T.n();
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min() / 1e-8;
  for (int i = 0; i < n; ++i) {
    const double e2 = i > 0 ? T.e[i - 1] * T.e[i - 1] : 0.0;
    q = T.d[i] - sigma - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double eigen_bisect(const Tridiag& T, double lo, double hi, double abs_tol) {
  const int below_lo = eigen_count_below(T, lo);
  if (eigen_count_below(T, hi) - below_lo != 1)
    throw SolverSingular("eigen_bisect: interval does not bracket exactly one eigenvalue");
  while (hi - lo > abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (eigen_count_below(T, mid) > below_lo)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiag_solve_shifted(const Tridiag& T, double sigma,
                                          std::vector<double> b) {
  const int n = T.n();
  std::vector<double> c(n), x(n);
  double denom = T.d[0] - sigma;
  if (denom == 0.0) denom = 1e-300;
  c[0] = T.e.empty() ? 0.0 : T.e[0] / denom;
  x[0] = b[0] / denom;
  for (int i = 1; i < n; ++i) {
    denom = (T.d[i] - sigma) - T.e[i - 1] * c[i - 1];
    if (denom == 0.0) denom = 1e-300;
    if (i < n - 1) c[i] = T.e[i] / denom;
    x[i] = (b[i] - T.e[i - 1] * x[i - 1]) / denom;
  }
  for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
  return x;
}

std::vector<double> inverse_iteration(const Tridiag& T, double lambda,
                                      double h, int iters) {
  const int n = T.n();
  std::vector<double> v(n, 1.0);
  // Small detuning keeps the shifted solve well conditioned.
  const double shift = lambda + 1e-11;
  for (int it = 0; it < iters; ++it) {
    v = tridiag_solve_shifted(T, shift, std::move(v));
    double norm = 0.0;
    for (double a : v) norm += a * a;
    norm = std::sqrt(norm * h);
    if (norm == 0.0) throw SolverSingular("inverse_iteration: zero vector");
    for (double& a : v) a /= norm;
  }
  // Fix sign: largest-magnitude entry positive.
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0)
    for (double& a : v) a = -a;
  return v;
}

}  // namespace multibump

#pragma once

#include <vector>

namespace multibump {

/// Symmetric tridiagonal matrix: diag d[0..n-1], off-diagonal e[0..n-2].
struct Tridiag {
  std::vector<double> d;
  std::vector<double> e;
  int n() const { return static_cast<int>(d.size()); }
};

/// Number of eigenvalues strictly below sigma (Sturm sequence count).
int eigen_count_below(const Tridiag& T, double sigma);

/// The single eigenvalue in (lo, hi), located by bisection to abs_tol.
/// The caller guarantees the interval brackets exactly one eigenvalue.
double eigen_bisect(const Tridiag& T, double lo, double hi,
                    double abs_tol = 1e-13);

/// Eigenvector for a known eigenvalue via inverse iteration; normalized in
/// the weighted l2 sense with weight h (so that sum v^2 h = 1).
std::vector<double> inverse_iteration(const Tridiag& T, double lambda,
                                      double h, int iters = 8);

/// Solve (T - sigma I) x = b with the Thomas algorithm (partial-pivot-free;
/// adequate for the diagonally structured shifts used here).
std::vector<double> tridiag_solve_shifted(const Tridiag& T, double sigma,
                                          std::vector<double> b);

}  // namespace multibump

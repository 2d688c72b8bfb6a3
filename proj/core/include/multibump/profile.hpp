#pragma once

#include <vector>

#include "multibump/quadrature.hpp"
#include "multibump/tridiag.hpp"

namespace multibump {

struct PowerNonlinearity {
  double p = 2.0;
  explicit PowerNonlinearity(double p_);
};

/// Homoclinic profile of w'' - w + w^p = 0: the soliton
///   w(x) = ((p+1)/2)^{1/(p-1)} cosh((p-1)x/2)^{-2/(p-1)},
/// together with the principal eigenfunction Z of
/// L0(phi) = phi'' + (p w^{p-1} - 1) phi, normalized so that ∫ Z^2 = 1.
/// All evaluators are closed-form; derivatives are analytic.
class HomoclinicProfile {
 public:
  explicit HomoclinicProfile(double p);

  double p() const { return p_; }
  /// Leading coefficient of the tail w(x) ~ amplitude * e^{-x}.
  double amplitude() const { return amplitude_; }

  double w(double x) const;
  double wp(double x) const;
  double wpp(double x) const;
  double Z(double x) const;
  double Zp(double x) const;
  double Zpp(double x) const;

  /// Principal eigenvalue of L0: (p-1)(p+3)/4.
  double lambda1() const { return lambda1_; }

 private:
  double p_;
  double b_;          // (p-1)/2
  double peak_;       // ((p+1)/2)^{1/(p-1)} = w(0)
  double amplitude_;  // (2(p+1))^{1/(p-1)}
  double lambda1_;
  double znorm_;      // 1/sqrt(∫ w^{p+1})
};

double lambda1(double p);

struct ProfileConstants {
  double p = 0;
  double lambda1 = 0;
  double c0 = 0;   // ∫ w'^2
  double c1 = 0;   // ∫ w' Z'
  double d0 = 0;   // ∫ Z^2
  double d1 = 0;   // ∫ s Z' Z
  double d2 = 0;   // ∫ Z'' Z
  double d3 = 0;   // ∫ (p w^{p-1} - 1) Z^2
  double wppZ = 0; // ∫ w'' Z
  double Cp = 0;   // lim e^s [w(s/2)^2 + w'(s/2)^2]
  double Cp_limit_route = 0;      // Aitken-accelerated limit evaluation
  double Cp_amplitude_route = 0;  // 2 A_p^2 with A_p fitted from the tail
  double cp = 0;   // Cp / c0
  double Ap = 0;
};

/// All integral constants of the reduction formulas, by adaptive quadrature
/// on [-L, L] with L sized so the exponential tails are below tolerance.
/// Cp is computed along two independent routes that must agree to 1e-8.
ProfileConstants profile_constants(double p, const QuadratureSpec& spec = {});

/// Tail-amplitude fit: extrapolates w(x) e^x sampled at xs (geometric
/// correction of the first neglected tail term).
double fit_amplitude(const HomoclinicProfile& prof,
                     const std::vector<double>& xs);

struct EigenSolveResult {
  double lambda1 = 0;          // Richardson-extrapolated principal eigenvalue
  double lambda1_h = 0;        // at the base spacing
  double lambda1_h2 = 0;       // at half the spacing
  double lambda2 = 0;          // translation mode, 0 up to O(h^2)
  int positive_count = 0;      // eigenvalues > eps
  int near_zero_count = 0;     // eigenvalues in (-eps, eps)
  std::vector<double> Z;       // discrete principal eigenfunction (base grid)
  double L0Z_residual = 0;     // ||T Z - lambda1_h Z||_inf on the base grid
};

/// Finite-difference eigensolve of L0 on [-L, L] (Dirichlet), spacing h and
/// h/2, Sturm bisection for the principal eigenvalue plus spectrum counts.
/// Independent of the closed-form lambda1/Z path. eps absorbs the O(h^2)
/// shift of the discrete translation mode.
EigenSolveResult eigensolve_L0(double p, double L = 40.0, double h = 0.01,
                               double eps = 1e-4);

/// Discrete L0 as a symmetric tridiagonal matrix on [-L, L] with spacing h.
Tridiag discretize_L0(double p, double L, double h);

}  // namespace multibump

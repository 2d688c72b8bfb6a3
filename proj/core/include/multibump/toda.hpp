#pragma once

#include <vector>

#include "multibump/interp.hpp"

namespace multibump {

/// Repulsive Toda system for the bump trajectories:
///   f_j'' = c_p ( e^{f_{j-1}-f_j} - e^{f_j-f_{j+1}} ),   f_0=-inf, f_{k+1}=+inf,
/// integrated from rest at z=0 and extended evenly.
struct TodaConfig {
  int k = 2;
  std::vector<double> a;  // initial positions, strictly increasing, sum 0
  double cp = 1.0;        // interaction constant C_p / c_0
  double alpha = 1.0;     // scaling parameter; gaps gain 2 log(1/alpha)
  double z_max = 40.0;    // half window
  double step = 0.0;      // integrator step; 0 -> 5e-4/alpha
  double out_dz = 0.01;   // output sample spacing
  double drift_tol = 1e-8;

  void validate() const;
  double resolved_step() const { return step > 0 ? step : 5e-4 / alpha; }
};

struct TodaState {
  std::vector<double> q;
  std::vector<double> p;
  double t = 0.0;
};

struct TodaAsymptotics {
  std::vector<double> beta;       // slopes f_j'(+inf)
  std::vector<double> B;          // offsets: f_j ~ beta_j |z| + B_j
  std::vector<double> tau_plus;   // fitted gap offsets, z -> +inf
  std::vector<double> tau_minus;  // equal by evenness
  double theta_hat = 0.0;         // exponential decay rate of the remainder
  double remainder_at_fit_start = 0.0;
  double fit_window_lo = 0.0, fit_window_hi = 0.0;
};

/// Sampled trajectory on a symmetric uniform z-grid with two derivatives,
/// asymptotic data, and the weight exponents derived from the slope gaps.
struct TodaTrajectory {
  int k = 0;
  double alpha = 1.0;
  double cp = 1.0;
  double z_max = 0.0;
  double dz = 0.0;
  std::vector<double> z;                 // symmetric grid
  std::vector<std::vector<double>> f;    // [j][iz]
  std::vector<std::vector<double>> fp;
  std::vector<std::vector<double>> fpp;
  std::vector<double> beta;
  std::vector<double> B;
  double theta_hat = 0.0;
  double theta0 = 0.0;  // vartheta/4 with vartheta = min slope gap / alpha
  double theta1 = 0.0;  // vartheta/2
  double hamiltonian_drift = 0.0;

  /// Quintic-Hermite evaluators valid for |zq| <= z_max (even beyond grid
  /// nodes; evenness is applied for z<0).
  double eval_f(int j, double zq) const;
  double eval_fp(int j, double zq) const;
  double eval_fpp(int j, double zq) const;

  HermiteSeries series(int j) const;
};

/// Exact even solution of the k=2 system: gap u = f2 - f1 satisfies
/// u'' = 2 c_p e^{-u} with u(0) = (a2-a1) + 2 log(1/alpha), u'(0) = 0:
///   u(z) = u(0) + 2 log cosh(mu z),  mu = alpha sqrt(c_p e^{a1-a2}).
struct ClosedFormK2 {
  double a1, a2, cp, alpha;
  double mu;      // asymptotic half-slope: f2' (+inf)
  double u0;      // gap at z=0
  ClosedFormK2(double a1_, double a2_, double cp_, double alpha_);

  double u(double z) const;
  double up(double z) const;
  double upp(double z) const;
  double f(int j, double z) const;   // j in {1,2}; f2 = -f1 = u/2
  double fp(int j, double z) const;
  double fpp(int j, double z) const;
  double B2() const;  // offset of f2: f2 ~ mu |z| + B2
};

/// Hamiltonian of the sampled state (kinetic + c_p sum of gap exponentials).
double toda_hamiltonian(const std::vector<double>& q,
                        const std::vector<double>& p, double cp);

/// Integrates the Toda system with a 4th-order Yoshida composition of
/// Stoermer-Verlet steps (symplectic, time-reversible); checks ordering and
/// Hamiltonian drift; fits the scattering asymptotics.
TodaTrajectory integrate_toda(const TodaConfig& config);

/// Rescaled family f_{alpha j}(z) = f_j(alpha z) + (2j - k - 1) log(1/alpha);
/// the result solves the same system. The base trajectory must cover
/// |z| <= z_max * alpha.
TodaTrajectory scale_family(const TodaTrajectory& base, double alpha,
                            double z_max, double out_dz);

/// Tail fit of slopes/offsets and the exponential remainder rate.
TodaAsymptotics extract_asymptotics(const TodaTrajectory& traj);

/// Trajectory with f_j(z) = const = a_j (used for single-bump setups and
/// synthetic ansatz configurations).
TodaTrajectory constant_trajectory(const std::vector<double>& a, double z_max,
                                   double out_dz, double alpha = 1.0,
                                   double cp = 1.0);

/// Samples the closed form onto a TodaTrajectory grid.
TodaTrajectory sample_closed_form_k2(const ClosedFormK2& cf, double z_max,
                                     double out_dz);

}  // namespace multibump

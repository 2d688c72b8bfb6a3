#include "multibump/profile.hpp"

#include <cmath>

#include "multibump/errors.hpp"
#include "multibump/fit.hpp"

namespace multibump {

PowerNonlinearity::PowerNonlinearity(double p_) : p(p_) {
  if (!(p >= 2.0)) throw ConfigInvalid("PowerNonlinearity: requires p >= 2");
}

HomoclinicProfile::HomoclinicProfile(double p) : p_(PowerNonlinearity(p).p) {
  b_ = 0.5 * (p_ - 1.0);
  peak_ = std::pow(0.5 * (p_ + 1.0), 1.0 / (p_ - 1.0));
  amplitude_ = std::pow(2.0 * (p_ + 1.0), 1.0 / (p_ - 1.0));
  lambda1_ = 0.25 * (p_ - 1.0) * (p_ + 3.0);
  // ∫ w^{p+1} in closed form via t = tanh(bx):
  //   ∫ sech(bx)^{2(p+1)/(p-1)} dx = (1/b) ∫_{-1}^1 (1-t^2)^{(p+3)/(2(p-1)) - 1} dt,
  // evaluated with the Beta function.
  const double q = (p_ + 3.0) / (2.0 * (p_ - 1.0));
  const double beta =
      std::exp(std::lgamma(q) + std::lgamma(0.5) - std::lgamma(q + 0.5));
  const double integral =
      std::pow(peak_, p_ + 1.0) / b_ * beta;
  znorm_ = 1.0 / std::sqrt(integral);
}

double HomoclinicProfile::w(double x) const {
  return peak_ * std::pow(std::cosh(b_ * x), -1.0 / b_);
}

double HomoclinicProfile::wp(double x) const {
  return -w(x) * std::tanh(b_ * x);
}

double HomoclinicProfile::wpp(double x) const {
  const double t = std::tanh(b_ * x);
  const double s2 = 1.0 - t * t;
  return w(x) * (t * t - b_ * s2);
}

double HomoclinicProfile::Z(double x) const {
  return znorm_ * std::pow(w(x), 0.5 * (p_ + 1.0));
}

double HomoclinicProfile::Zp(double x) const {
  // Z' = (p+1)/2 w^{(p-1)/2} w' / sqrt(∫ w^{p+1})
  return znorm_ * 0.5 * (p_ + 1.0) * std::pow(w(x), 0.5 * (p_ - 1.0)) * wp(x);
}

double HomoclinicProfile::Zpp(double x) const {
  const double wv = w(x), wppv = wpp(x);
  const double th = std::tanh(b_ * x);
  const double k = 0.5 * (p_ + 1.0);
  // (k-1) w'^2 / w rewritten as (k-1) w tanh^2(bx); keeps the tail finite.
  return znorm_ * k * std::pow(wv, k - 1.0) *
         ((k - 1.0) * wv * th * th + wppv);
}

double lambda1(double p) { return 0.25 * (p - 1.0) * (p + 3.0); }

double fit_amplitude(const HomoclinicProfile& prof,
                     const std::vector<double>& xs) {
  if (xs.size() < 2) throw ConfigInvalid("fit_amplitude: need >= 2 samples");
  // w(x) e^x = A (1 + c r + O(r^2)) with r = e^{-(p-1)x}; two-point
  // elimination of the first correction term.
  const size_t n = xs.size();
  const double x1 = xs[n - 2], x2 = xs[n - 1];
  const double v1 = prof.w(x1) * std::exp(x1);
  const double v2 = prof.w(x2) * std::exp(x2);
  const double r1 = std::exp(-(prof.p() - 1.0) * x1);
  const double r2 = std::exp(-(prof.p() - 1.0) * x2);
  return (v2 * r1 - v1 * r2) / (r1 - r2);
}

ProfileConstants profile_constants(double p, const QuadratureSpec& spec) {
  const HomoclinicProfile prof(p);
  ProfileConstants c;
  c.p = p;
  c.lambda1 = prof.lambda1();
  c.Ap = prof.amplitude();

  // Truncation: integrands decay at least like e^{-2|x|}; e^{-L} below
  // tolerance at L = 40.
  const double L = 40.0;
  auto quad = [&](auto&& f) { return integrate_symmetric(f, L, spec); };

  c.c0 = quad([&](double x) { return prof.wp(x) * prof.wp(x); });
  c.c1 = quad([&](double x) { return prof.wp(x) * prof.Zp(x); });
  c.d0 = quad([&](double x) { return prof.Z(x) * prof.Z(x); });
  c.d1 = quad([&](double x) { return x * prof.Zp(x) * prof.Z(x); });
  c.d2 = quad([&](double x) { return prof.Zpp(x) * prof.Z(x); });
  c.d3 = quad([&](double x) {
    const double wv = prof.w(x);
    return (p * std::pow(wv, p - 1.0) - 1.0) * prof.Z(x) * prof.Z(x);
  });
  c.wppZ = quad([&](double x) { return prof.wpp(x) * prof.Z(x); });

  // Route 1: Aitken-accelerated limit e^s [w(s/2)^2 + w'(s/2)^2].
  std::vector<double> seq;
  for (double s : {20.0, 30.0, 40.0}) {
    const double wv = prof.w(0.5 * s), wpv = prof.wp(0.5 * s);
    seq.push_back(std::exp(s) * (wv * wv + wpv * wpv));
  }
  c.Cp_limit_route = aitken(seq);

  // Route 2: 2 A_p^2 with the amplitude fitted from the tail.
  const double a_fit = fit_amplitude(prof, {10.0, 20.0, 30.0});
  c.Cp_amplitude_route = 2.0 * a_fit * a_fit;

  if (std::abs(c.Cp_limit_route - c.Cp_amplitude_route) > 1e-8)
    throw QuadratureNotConverged(
        "profile_constants: Cp routes disagree beyond 1e-8");
  c.Cp = c.Cp_limit_route;
  c.cp = c.Cp / c.c0;
  return c;
}

Tridiag discretize_L0(double p, double L, double h) {
  const HomoclinicProfile prof(p);
  const int n = 2 * static_cast<int>(std::round(L / h)) - 1;
  Tridiag T;
  T.d.resize(n);
  T.e.assign(n - 1, 1.0 / (h * h));
  for (int i = 0; i < n; ++i) {
    const double x = -L + h * (i + 1);
    const double wv = prof.w(x);
    T.d[i] = -2.0 / (h * h) + p * std::pow(wv, p - 1.0) - 1.0;
  }
  return T;
}

EigenSolveResult eigensolve_L0(double p, double L, double h, double eps) {
  EigenSolveResult r;
  const double guess = lambda1(p);
  const Tridiag T1 = discretize_L0(p, L, h);
  const Tridiag T2 = discretize_L0(p, L, 0.5 * h);
  // The principal eigenvalue is isolated; bracket it generously.
  const double lo = 0.5 * guess, hi = 2.0 * guess + 1.0;
  r.lambda1_h = eigen_bisect(T1, lo, hi);
  r.lambda1_h2 = eigen_bisect(T2, lo, hi);
  r.lambda1 = r.lambda1_h2 + (r.lambda1_h2 - r.lambda1_h) / 3.0;

  const int n = T1.n();
  r.positive_count = n - eigen_count_below(T1, eps);
  r.near_zero_count = eigen_count_below(T1, eps) - eigen_count_below(T1, -eps);
  r.lambda2 = eigen_bisect(T1, -0.5, 0.5 * guess);

  r.Z = inverse_iteration(T1, r.lambda1_h, h);
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    double lz = T1.d[i] * r.Z[i];
    if (i > 0) lz += T1.e[i - 1] * r.Z[i - 1];
    if (i < n - 1) lz += T1.e[i] * r.Z[i + 1];
    res = std::max(res, std::abs(lz - r.lambda1_h * r.Z[i]));
  }
  r.L0Z_residual = res;
  return r;
}

}  // namespace multibump

#pragma once

#include <cmath>

namespace multibump {

// C^2 quintic ramp: s(0)=0, s(1)=1, s'=s''=0 at both ends.
inline double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}
inline double smoothstep5_d(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return t * t * (30.0 + t * (-60.0 + 30.0 * t));
}
inline double smoothstep5_dd(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return t * (60.0 + t * (-180.0 + 120.0 * t));
}

/// Ramp cutoff: 0 for t<T1, 1 for t>T2, C^2 monotone between.
struct RampCutoff {
  double T1 = 1.0;
  double T2 = 2.0;
  double operator()(double t) const { return smoothstep5((t - T1) / (T2 - T1)); }
  double d(double t) const { return smoothstep5_d((t - T1) / (T2 - T1)) / (T2 - T1); }
  double dd(double t) const {
    const double w = T2 - T1;
    return smoothstep5_dd((t - T1) / w) / (w * w);
  }
};

/// Plateau window eta_a^b: 1 for |s|<a, 0 for |s|>b, C^2 monotone between.
/// The plateau and the zero set are reached exactly so that the nesting
/// identities of the dyadic cutoff family hold pointwise in floating point.
struct PlateauCutoff {
  double a = 0.5;
  double b = 1.0;
  double operator()(double s) const {
    const double t = std::abs(s);
    if (t <= a) return 1.0;
    if (t >= b) return 0.0;
    return 1.0 - smoothstep5((t - a) / (b - a));
  }
  double d(double s) const {
    const double t = std::abs(s);
    if (t <= a || t >= b) return 0.0;
    const double sign = s < 0 ? -1.0 : 1.0;
    return -sign * smoothstep5_d((t - a) / (b - a)) / (b - a);
  }
  double dd(double s) const {
    const double t = std::abs(s);
    if (t <= a || t >= b) return 0.0;
    const double w = b - a;
    return -smoothstep5_dd((t - a) / w) / (w * w);
  }
};

}  // namespace multibump

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "multibump/errors.hpp"

namespace multibump {

/// Quintic Hermite interpolation of a function sampled with two derivatives
/// on a uniform grid. Exact at nodes; O(h^6)/O(h^5)/O(h^4) between them for
/// value/first/second derivative.
class HermiteSeries {
 public:
  HermiteSeries() = default;
  HermiteSeries(double x0, double dx, std::vector<double> v,
                std::vector<double> d1, std::vector<double> d2)
      : x0_(x0), dx_(dx), v_(std::move(v)), d1_(std::move(d1)),
        d2_(std::move(d2)) {
    if (v_.size() < 2 || v_.size() != d1_.size() || v_.size() != d2_.size())
      throw ConfigInvalid("HermiteSeries: inconsistent sample arrays");
  }

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + dx_ * static_cast<double>(v_.size() - 1); }
  bool covers(double x) const {
    return x >= x_min() - 1e-9 && x <= x_max() + 1e-9;
  }

  double value(double x) const { return eval(x, 0); }
  double deriv(double x) const { return eval(x, 1); }
  double deriv2(double x) const { return eval(x, 2); }

 private:
  double eval(double x, int order) const {
    const auto n = static_cast<std::ptrdiff_t>(v_.size());
    double u = (x - x0_) / dx_;
    auto i = static_cast<std::ptrdiff_t>(std::floor(u));
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    const double t = u - static_cast<double>(i);
    const double h = dx_;
    const double c[6] = {v_[i],          h * d1_[i],      h * h * d2_[i],
                         v_[i + 1],      h * d1_[i + 1],  h * h * d2_[i + 1]};
    double b[6];
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    switch (order) {
      case 0:
        b[0] = 1 - 10 * t3 + 15 * t4 - 6 * t5;
        b[1] = t - 6 * t3 + 8 * t4 - 3 * t5;
        b[2] = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
        b[3] = 10 * t3 - 15 * t4 + 6 * t5;
        b[4] = -4 * t3 + 7 * t4 - 3 * t5;
        b[5] = 0.5 * t3 - t4 + 0.5 * t5;
        break;
      case 1:
        b[0] = -30 * t2 + 60 * t3 - 30 * t4;
        b[1] = 1 - 18 * t2 + 32 * t3 - 15 * t4;
        b[2] = t - 4.5 * t2 + 6 * t3 - 2.5 * t4;
        b[3] = 30 * t2 - 60 * t3 + 30 * t4;
        b[4] = -12 * t2 + 28 * t3 - 15 * t4;
        b[5] = 1.5 * t2 - 4 * t3 + 2.5 * t4;
        break;
      default:
        b[0] = -60 * t + 180 * t2 - 120 * t3;
        b[1] = -36 * t + 96 * t2 - 60 * t3;
        b[2] = 1 - 9 * t + 18 * t2 - 10 * t3;
        b[3] = 60 * t - 180 * t2 + 120 * t3;
        b[4] = -24 * t + 84 * t2 - 60 * t3;
        b[5] = 3 * t - 12 * t2 + 10 * t3;
        break;
    }
    double s = 0.0;
    for (int m = 0; m < 6; ++m) s += c[m] * b[m];
    if (order == 1) return s / h;
    if (order == 2) return s / (h * h);
    return s;
  }

  double x0_ = 0.0, dx_ = 1.0;
  std::vector<double> v_, d1_, d2_;
};

}  // namespace multibump

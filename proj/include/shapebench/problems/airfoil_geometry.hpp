#pragma once

// Kulfan (CST) airfoil geometry: thickness, edge angles and the wiggliness
// functional of the weight sequences. Pure geometry, no aerodynamics.
//
//   y_u(x) = C(x) sum_i u_i B_i(x) + p_le x (1-x)^(n+1/2) + x t_te / 2
//   y_l(x) = C(x) sum_i l_i B_i(x) + p_le x (1-x)^(n+1/2) - x t_te / 2
//
// with C(x) = sqrt(x) (1 - x) and B_i the degree-n Bernstein basis.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "shapebench/errors.hpp"

namespace shapebench {

struct KulfanAirfoil {
  std::vector<double> upper;
  std::vector<double> lower;
  double leading_edge_weight = 0.0;
  double te_thickness = 0.0;

  std::size_t degree() const { return upper.size() - 1; }

  void validate() const {
    if (upper.size() < 3 || upper.size() != lower.size()) {
      throw ConfigError("CST airfoil needs matching upper/lower weight lists of length >= 3");
    }
  }

  double thickness(double x) const {
    const double c = std::sqrt(x) * (1.0 - x);
    double s = 0.0;
    const std::size_t n = degree();
    for (std::size_t i = 0; i <= n; ++i) s += (upper[i] - lower[i]) * bernstein(n, i, x);
    return c * s + x * te_thickness;
  }

  double camber(double x) const {
    const double c = std::sqrt(x) * (1.0 - x);
    double s = 0.0;
    const std::size_t n = degree();
    for (std::size_t i = 0; i <= n; ++i) s += 0.5 * (upper[i] + lower[i]) * bernstein(n, i, x);
    return c * s + leading_edge_weight * x * std::pow(1.0 - x, static_cast<double>(n) + 0.5);
  }

  /// Smallest thickness over a cosine-spaced interior grid.
  double min_thickness(std::size_t samples = 200) const {
    double t = HUGE_VAL;
    for (std::size_t k = 1; k < samples; ++k) {
      const double x = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples)));
      t = std::min(t, thickness(x));
    }
    return t;
  }

  /// Included angle between the surfaces at the trailing edge, degrees.
  double te_wedge_angle() const {
    const double su = upper.back() - 0.5 * te_thickness;
    const double sl = lower.back() + 0.5 * te_thickness;
    return (std::atan(su) - std::atan(sl)) * 180.0 / std::numbers::pi;
  }

  /// 180 for a rounded nose (u_0 > l_0). When the first weights cross, the
  /// surfaces meet at a cusp and the angle closes with the overlap.
  double le_angle() const {
    const double gap = upper.front() - lower.front();
    if (gap > 0.0) return 180.0;
    return 180.0 - 2.0 * std::atan(-gap / 0.05) * 180.0 / std::numbers::pi;
  }

  double wiggliness() const { return wiggliness_of(upper) + wiggliness_of(lower); }

  static double wiggliness_of(std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      const double d2 = w[i + 1] - 2.0 * w[i] + w[i - 1];
      s += d2 * d2;
    }
    return s;
  }

  static double bernstein(std::size_t n, std::size_t i, double x) {
    double binom = 1.0;
    for (std::size_t k = 1; k <= i; ++k) binom = binom * static_cast<double>(n - i + k) / static_cast<double>(k);
    return binom * std::pow(x, static_cast<double>(i)) * std::pow(1.0 - x, static_cast<double>(n - i));
  }
};

/// Least-squares fit of eight CST weights to the closed-trailing-edge
/// NACA 0012 half-thickness on 399 cosine-spaced stations (max error 1.1e-4).
inline constexpr std::array<double, 8> kNaca0012Weights{0.17296113, 0.15244337, 0.17400288, 0.13006695,
                                                        0.16511180, 0.13010883, 0.14786027, 0.14374724};

inline KulfanAirfoil naca0012() {
  KulfanAirfoil a;
  a.upper.assign(kNaca0012Weights.begin(), kNaca0012Weights.end());
  for (double w : kNaca0012Weights) a.lower.push_back(-w);
  return a;
}

inline double naca0012_wiggliness() {
  static const double w = naca0012().wiggliness();
  return w;
}

}  // namespace shapebench

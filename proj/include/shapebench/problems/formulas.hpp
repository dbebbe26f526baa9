#pragma once

// Objective and constraint arithmetic shared by the task formulations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"

namespace shapebench {

enum class Sense { maximize, minimize };

inline const char* to_string(Sense s) { return s == Sense::maximize ? "maximize" : "minimize"; }

inline Sense parse_sense(const std::string& s) {
  if (s == "maximize" || s == "max") return Sense::maximize;
  if (s == "minimize" || s == "min") return Sense::minimize;
  throw ConfigError("unknown objective sense '" + s + "'");
}

/// Penalty composition in the task's own sense:
///   maximize:  raw - lambda * sum(v)
///   minimize:  raw + lambda * sum(v)
inline double penalized_reward(double raw, const std::map<std::string, double>& violations, double lambda,
                               Sense sense = Sense::maximize) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ContractError("penalty weight must be finite and >= 0");
  double total = 0.0;
  for (const auto& [name, v] : violations) {
    if (!(v >= 0.0 && v <= 1.0)) throw ContractError("violation '" + name + "' outside [0, 1]");
    total += v;
  }
  return sense == Sense::maximize ? raw - lambda * total : raw + lambda * total;
}

/// Chord Reynolds number on the fixed-lift polar: 5e5 * (cl / 1.25)^(-1/2).
inline double reynolds_schedule(double cl) {
  if (!(cl > 0.0) || !std::isfinite(cl)) throw ContractError("reynolds_schedule: cl must be positive");
  return 500000.0 / std::sqrt(cl / 1.25);
}

/// Weighted mean sum(w_i v_i) / sum(w_i).
inline double weighted_multipoint(std::span<const double> values, std::span<const double> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw ContractError("weighted_multipoint: values and weights need equal nonzero length");
  }
  double sw = 0.0;
  double swv = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw ContractError("weighted_multipoint: negative weight");
    sw += weights[i];
    swv += weights[i] * values[i];
  }
  if (sw <= 0.0) throw ContractError("weighted_multipoint: all weights are zero");
  return swv / sw;
}

/// Worst case over operating points, for objectives that are maximized.
inline double robust_min(std::span<const double> values) {
  if (values.empty()) throw ContractError("robust_min: empty list");
  return *std::min_element(values.begin(), values.end());
}

struct BisectionResult {
  double alpha = 0.0;
  bool bracketed = true;
  int evaluations = 0;
};

/// Bisection for cl_fn(alpha) = target on [lo, hi] with exactly `iters`
/// halvings; returns the final midpoint. When the target is not bracketed by
/// the endpoint values, returns the endpoint whose lift is closer to the
/// target and clears `bracketed`.
inline BisectionResult bisect_alpha_to_cl(const std::function<double(double)>& cl_fn, double target, double lo,
                                          double hi, int iters) {
  if (!(lo < hi)) throw ContractError("bisect_alpha_to_cl: need lo < hi");
  if (iters < 1) throw ContractError("bisect_alpha_to_cl: need at least one iteration");
  BisectionResult r;
  const double f_lo = cl_fn(lo) - target;
  const double f_hi = cl_fn(hi) - target;
  r.evaluations = 2;
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) throw EvaluationError("bisect_alpha_to_cl: non-finite lift");
  if (f_lo == 0.0) return {lo, true, r.evaluations};
  if (f_hi == 0.0) return {hi, true, r.evaluations};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    r.bracketed = false;
    r.alpha = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    return r;
  }
  const bool rising = f_hi > 0.0;
  double a = lo;
  double b = hi;
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (a + b);
    const double f_mid = cl_fn(mid) - target;
    ++r.evaluations;
    if (!std::isfinite(f_mid)) throw EvaluationError("bisect_alpha_to_cl: non-finite lift");
    if (f_mid == 0.0) {
      a = b = mid;
      break;
    }
    if ((f_mid > 0.0) == rising) {
      b = mid;
    } else {
      a = mid;
    }
  }
  r.alpha = 0.5 * (a + b);
  return r;
}

struct SurfaceCell {
  double cp = 0.0;   // pressure coefficient
  double cfx = 0.0;  // streamwise skin-friction coefficient
  double area = 0.0;
  double nx = 0.0;   // streamwise component of the outward normal
};

/// Integrated drag coefficient (1/S_ref) * sum(cp A nx + cfx A).
inline double integrated_drag(std::span<const SurfaceCell> cells, double s_ref) {
  if (!(s_ref > 0.0) || !std::isfinite(s_ref)) throw ContractError("integrated_drag: s_ref must be positive");
  double sum = 0.0;
  for (const auto& c : cells) {
    if (!std::isfinite(c.cp) || !std::isfinite(c.cfx) || !std::isfinite(c.area) || !std::isfinite(c.nx)) {
      throw ContractError("integrated_drag: non-finite cell");
    }
    sum += c.cp * c.area * c.nx + c.cfx * c.area;
  }
  return sum / s_ref;
}

inline constexpr double kCarDynamicPressure = 1000.0;  // Pa, 0.5 * 1.25 * 40^2
inline constexpr double kCarReferenceArea = 2.37;      // m^2

/// Car drag coefficient from pressure and shear drag forces in newtons.
inline double car_drag_coefficient(double f_pressure, double f_shear) {
  return (f_pressure + f_shear) / (kCarDynamicPressure * kCarReferenceArea);
}

/// Indices of non-dominated points, in input order. `senses[k]` gives the
/// direction of objective k.
inline std::vector<std::size_t> pareto_front(const std::vector<std::vector<double>>& points,
                                             std::span<const Sense> senses) {
  if (points.empty()) throw ContractError("pareto_front: empty input");
  const std::size_t m = senses.size();
  for (const auto& p : points) {
    if (p.size() != m) throw ContractError("pareto_front: objective vectors must match the sense list");
  }
  auto better_or_equal = [&](double a, double b, Sense s) { return s == Sense::maximize ? a >= b : a <= b; };
  auto strictly_better = [&](double a, double b, Sense s) { return s == Sense::maximize ? a > b : a < b; };
  auto dominates = [&](const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t k = 0; k < m; ++k) {
      if (!better_or_equal(a[k], b[k], senses[k])) return false;
      strict = strict || strictly_better(a[k], b[k], senses[k]);
    }
    return strict;
  };

  // Visiting in order of the first objective keeps the running front small;
  // ties on that objective still need the eviction step below.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return strictly_better(points[a][0], points[b][0], senses[0]);
  });
  std::vector<std::size_t> front;
  for (std::size_t idx : order) {
    bool dominated = false;
    for (std::size_t f : front) {
      if (dominates(points[f], points[idx])) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(front, [&](std::size_t f) { return dominates(points[idx], points[f]); });
    front.push_back(idx);
  }
  std::vector<char> keep(points.size(), 0);
  for (std::size_t f : front) keep[f] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

}  // namespace shapebench

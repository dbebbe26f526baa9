#pragma once

// Particle swarm with linearly scheduled coefficients.
//
//   v <- w v + c1 r1 (p_best - x) + c2 r2 (g_best - x),   x <- clip(x + v)
//
// r1, r2 are drawn per particle and per dimension. Velocities start in
// U[-v0 * width, v0 * width] with width = 1 in the unit cube. Personal and
// global bests are refreshed only after the whole swarm has been evaluated.
// The initial swarm is charged to the budget, so a budget B runs
// T = floor(B / N) - 1 update iterations.

#include <cmath>
#include <limits>
#include <vector>

#include "shapebench/optimizers/types.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct PsoCoefficients {
  double w;
  double c1;
  double c2;
};

/// Coefficients at iteration t of T (t = 0 gives the start values, t = T the final ones).
inline PsoCoefficients pso_coefficients(double t, double T) {
  const double f = T > 0.0 ? t / T : 1.0;
  // (1 - f) a + f b hits both end values and the midpoint exactly
  auto mix = [f](double a, double b) { return (1.0 - f) * a + f * b; };
  return {mix(0.8, 0.2), mix(1.5, 0.5), mix(0.2, 3.0)};
}

struct PsoOptions {
  int swarm_size = 20;
  int iterations = 0;  // 0: derived from the budget
  double velocity_scale = 0.1;

  static PsoOptions resolve(const Json& o, Json& out, std::size_t budget) {
    PsoOptions x;
    x.swarm_size = take_option(o, out, "swarm_size", x.swarm_size);
    x.iterations = take_option(o, out, "iterations", x.iterations);
    x.velocity_scale = take_option(o, out, "velocity_scale", x.velocity_scale);
    reject_unknown_options(o, out, "pso");
    require(x.swarm_size >= 2, "pso: swarm_size must be >= 2");
    require(x.iterations >= 0, "pso: iterations must be >= 0");
    require(x.velocity_scale >= 0.0, "pso: velocity_scale must be >= 0");
    const auto n = static_cast<std::size_t>(x.swarm_size);
    const int derived = budget >= n ? static_cast<int>(budget / n) - 1 : 0;
    if (x.iterations == 0 || x.iterations > derived) x.iterations = derived;
    out["iterations"] = x.iterations;
    return x;
  }
};

class Pso {
 public:
  Pso(PsoOptions opt, Rng rng) : opt_(opt), rng_(std::move(rng)) {}

  void run(BudgetedObjective& obj, const std::vector<Observation>& seeds) {
    const std::size_t d = obj.dim();
    const auto n = static_cast<std::size_t>(opt_.swarm_size);
    std::vector<std::vector<double>> x(n, std::vector<double>(d));
    std::vector<std::vector<double>> v(n, std::vector<double>(d));
    std::vector<double> fx(n, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < seeds.size()) {
        x[i] = seeds[i].u;
      } else {
        for (auto& c : x[i]) c = rng_.uniform();
      }
      for (auto& c : v[i]) c = rng_.uniform(-opt_.velocity_scale, opt_.velocity_scale);
    }
    for (std::size_t i = 0; i < n; ++i) fx[i] = i < seeds.size() ? seeds[i].reward : obj(x[i]);

    auto pbest = x;
    auto pval = fx;
    std::size_t g = best_of(pval);
    std::vector<double> gbest = pbest[g];
    double gval = pval[g];

    const int T = opt_.iterations;
    for (int t = 0; t < T; ++t) {
      const PsoCoefficients c = pso_coefficients(t, std::max(T - 1, 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const double r1 = rng_.uniform();
          const double r2 = rng_.uniform();
          v[i][j] = c.w * v[i][j] + c.c1 * r1 * (pbest[i][j] - x[i][j]) + c.c2 * r2 * (gbest[j] - x[i][j]);
          x[i][j] = std::clamp(x[i][j] + v[i][j], 0.0, 1.0);
        }
      }
      for (std::size_t i = 0; i < n; ++i) fx[i] = obj(x[i]);
      for (std::size_t i = 0; i < n; ++i) {
        if (fx[i] > pval[i]) {
          pval[i] = fx[i];
          pbest[i] = x[i];
        }
      }
      g = best_of(pval);
      if (pval[g] > gval) {
        gval = pval[g];
        gbest = pbest[g];
      }
    }
  }

 private:
  static std::size_t best_of(const std::vector<double>& vals) {
    std::size_t b = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
      if (vals[i] > vals[b]) b = i;
    }
    return b;
  }

  PsoOptions opt_;
  Rng rng_;
};

}  // namespace shapebench

#pragma once

// Projected limited-memory BFGS on the unit cube (minimizes -reward).
//
// Each iteration builds d = -H g with the two-loop recursion over the last m
// curvature pairs, zeroes components that push into an active bound, and
// backtracks along the projected path P(x + t d) until
//   f(P(x + t d)) <= f(x) + c * g . (P(x + t d) - x),
// halving t at most max_backtracks times. A restart stops on
//   (f_k - f_{k+1}) / max(|f_k|, |f_{k+1}|, 1) <= ftol,
//   max_i |P(x - g)_i - x_i| <= gtol, or maxiter.
// Gradients are central differences (2d charged evaluations) unless the
// environment exposes an analytic gradient and exact_gradient is set.

#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "shapebench/optimizers/fd_gradient.hpp"
#include "shapebench/optimizers/types.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct LbfgsbOptions {
  int memory = 10;
  double ftol = 1e-9;
  double gtol = 1e-6;
  int maxiter = 200;
  int restarts = 3;
  double fd_eps = 1e-4;
  double armijo_c = 1e-4;
  int max_backtracks = 20;
  bool exact_gradient = false;

  static LbfgsbOptions resolve(const Json& o, Json& out) {
    LbfgsbOptions x;
    x.memory = take_option(o, out, "memory", x.memory);
    x.ftol = take_option(o, out, "ftol", x.ftol);
    x.gtol = take_option(o, out, "gtol", x.gtol);
    x.maxiter = take_option(o, out, "maxiter", x.maxiter);
    x.restarts = take_option(o, out, "restarts", x.restarts);
    x.fd_eps = take_option(o, out, "fd_eps", x.fd_eps);
    x.armijo_c = take_option(o, out, "armijo_c", x.armijo_c);
    x.max_backtracks = take_option(o, out, "max_backtracks", x.max_backtracks);
    x.exact_gradient = take_option(o, out, "exact_gradient", x.exact_gradient);
    reject_unknown_options(o, out, "lbfgsb");
    require(x.memory >= 1, "lbfgsb: memory must be >= 1");
    require(x.ftol >= 0.0 && x.gtol >= 0.0, "lbfgsb: tolerances must be >= 0");
    require(x.maxiter >= 1 && x.restarts >= 1, "lbfgsb: maxiter and restarts must be >= 1");
    require(x.fd_eps > 0.0 && x.fd_eps < 0.5, "lbfgsb: fd_eps must lie in (0, 0.5)");
    require(x.armijo_c > 0.0 && x.armijo_c < 1.0, "lbfgsb: armijo_c must lie in (0, 1)");
    require(x.max_backtracks >= 1, "lbfgsb: max_backtracks must be >= 1");
    return x;
  }
};

/// Gradient of reward in unit coordinates, when the evaluator has one.
using RewardGradient = std::function<std::vector<double>(std::span<const double>)>;

class Lbfgsb {
 public:
  Lbfgsb(LbfgsbOptions opt, Rng rng, RewardGradient exact = {})
      : opt_(opt), rng_(std::move(rng)), exact_(std::move(exact)) {}

  void run(BudgetedObjective& obj, const std::vector<Observation>& seeds) {
    const std::size_t d = obj.dim();
    for (int r = 0; r < opt_.restarts; ++r) {
      std::vector<double> x0(d);
      std::optional<double> f0;
      if (r == 0 && !seeds.empty()) {
        const auto best = std::max_element(seeds.begin(), seeds.end(),
                                           [](const auto& a, const auto& b) { return a.reward < b.reward; });
        x0 = best->u;
        if (std::isfinite(best->reward)) f0 = -best->reward;
      } else {
        for (auto& v : x0) v = rng_.uniform();
      }
      try {
        minimize_from(obj, x0, f0);
      } catch (const EvaluationError& e) {
        obj.warn(std::string("lbfgsb restart ") + std::to_string(r) + " abandoned: " + e.what());
      }
    }
  }

  struct Stats {
    int iterations = 0;
    std::string stop;
  };
  const std::vector<Stats>& stats() const { return stats_; }

 private:
  double f(BudgetedObjective& obj, std::span<const double> x) { return -obj(x); }

  std::vector<double> grad(BudgetedObjective& obj, const std::vector<double>& x) {
    if (opt_.exact_gradient && exact_) {
      auto g = exact_(x);
      for (auto& v : g) v = -v;
      return g;
    }
    return fd_gradient([&](std::span<const double> p) { return f(obj, p); }, x, opt_.fd_eps);
  }

  static double proj_grad_norm(const std::vector<double>& x, const std::vector<double>& g) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(std::clamp(x[i] - g[i], 0.0, 1.0) - x[i]));
    return m;
  }

  void minimize_from(BudgetedObjective& obj, std::vector<double> x, std::optional<double> f_known) {
    const std::size_t d = x.size();
    double fx = f_known ? *f_known : f(obj, x);
    if (!std::isfinite(fx)) throw EvaluationError("start point failed to evaluate");
    std::vector<double> g = grad(obj, x);
    std::deque<std::vector<double>> S;
    std::deque<std::vector<double>> Y;
    std::deque<double> rho;
    Stats st;
    for (int it = 0; it < opt_.maxiter; ++it) {
      st.iterations = it;
      if (proj_grad_norm(x, g) <= opt_.gtol) {
        st.stop = "gtol";
        break;
      }
      std::vector<double> dir = two_loop(g, S, Y, rho);
      // no movement into active bounds
      for (std::size_t i = 0; i < d; ++i) {
        if ((x[i] <= 0.0 && dir[i] < 0.0) || (x[i] >= 1.0 && dir[i] > 0.0)) dir[i] = 0.0;
      }
      double slope = std::inner_product(g.begin(), g.end(), dir.begin(), 0.0);
      if (!(slope < 0.0)) {
        S.clear();
        Y.clear();
        rho.clear();
        for (std::size_t i = 0; i < d; ++i) dir[i] = -g[i];
        for (std::size_t i = 0; i < d; ++i) {
          if ((x[i] <= 0.0 && dir[i] < 0.0) || (x[i] >= 1.0 && dir[i] > 0.0)) dir[i] = 0.0;
        }
      }
      if (S.empty()) {
        // first step of a memory cycle: cap the longest move at 1/4 of the cube
        double dmax = 0.0;
        for (double v : dir) dmax = std::max(dmax, std::abs(v));
        if (dmax > 0.25) {
          for (auto& v : dir) v *= 0.25 / dmax;
        }
      }
      double t = 1.0;
      std::vector<double> xn(d);
      double fn = 0.0;
      bool accepted = false;
      for (int bt = 0; bt <= opt_.max_backtracks; ++bt) {
        for (std::size_t i = 0; i < d; ++i) xn[i] = std::clamp(x[i] + t * dir[i], 0.0, 1.0);
        double decrease = 0.0;
        for (std::size_t i = 0; i < d; ++i) decrease += g[i] * (xn[i] - x[i]);
        if (decrease >= 0.0) break;  // projected path is not a descent path
        fn = f(obj, xn);
        if (std::isfinite(fn) && fn <= fx + opt_.armijo_c * decrease) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        st.stop = "line search";
        break;
      }
      std::vector<double> gn = grad(obj, xn);
      std::vector<double> s(d);
      std::vector<double> y(d);
      for (std::size_t i = 0; i < d; ++i) {
        s[i] = xn[i] - x[i];
        y[i] = gn[i] - g[i];
      }
      const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
      const double yy = std::inner_product(y.begin(), y.end(), y.begin(), 0.0);
      if (sy > 1e-12 * yy && sy > 0.0) {
        S.push_back(std::move(s));
        Y.push_back(std::move(y));
        rho.push_back(1.0 / sy);
        if (static_cast<int>(S.size()) > opt_.memory) {
          S.pop_front();
          Y.pop_front();
          rho.pop_front();
        }
      }
      const double rel = (fx - fn) / std::max({std::abs(fx), std::abs(fn), 1.0});
      x = std::move(xn);
      fx = fn;
      g = std::move(gn);
      if (rel <= opt_.ftol) {
        st.stop = "ftol";
        break;
      }
      if (it + 1 == opt_.maxiter) st.stop = "maxiter";
    }
    stats_.push_back(st);
  }

  static std::vector<double> two_loop(const std::vector<double>& g, const std::deque<std::vector<double>>& S,
                                      const std::deque<std::vector<double>>& Y, const std::deque<double>& rho) {
    const std::size_t k = S.size();
    std::vector<double> q = g;
    std::vector<double> a(k);
    for (std::size_t j = k; j-- > 0;) {
      a[j] = rho[j] * std::inner_product(S[j].begin(), S[j].end(), q.begin(), 0.0);
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= a[j] * Y[j][i];
    }
    double gamma = 1.0;
    if (k > 0) {
      gamma = std::inner_product(S.back().begin(), S.back().end(), Y.back().begin(), 0.0) /
              std::inner_product(Y.back().begin(), Y.back().end(), Y.back().begin(), 0.0);
    }
    for (auto& v : q) v *= gamma;
    for (std::size_t j = 0; j < k; ++j) {
      const double b = rho[j] * std::inner_product(Y[j].begin(), Y[j].end(), q.begin(), 0.0);
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += S[j][i] * (a[j] - b);
    }
    for (auto& v : q) v = -v;
    return q;
  }

  LbfgsbOptions opt_;
  Rng rng_;
  RewardGradient exact_;
  std::vector<Stats> stats_;
};

}  // namespace shapebench

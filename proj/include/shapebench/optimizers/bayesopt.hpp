#pragma once

// GP Bayesian optimization with log expected improvement.
//
// n_initial uniform designs (warm starts count towards them), then one
// evaluation per iteration at the maximizer of
//
//   log EI(x) = log sigma + log h(z),  h(z) = phi(z) + z Phi(z),  z = (mu - f*) / sigma
//
// on standardized rewards, f* the best standardized observation. The
// acquisition is scored on raw_samples Halton points; the best num_restarts
// are refined by projected gradient ascent on the cube. Failed evaluations
// (reward -inf) stay in the trajectory but are left out of the GP.
// Nothing depends on the total budget, so a shorter run is a prefix of a
// longer one with the same seed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "shapebench/optimizers/gaussian_process.hpp"
#include "shapebench/optimizers/types.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

inline double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// log(phi(z) + z Phi(z)), accurate far into the lower tail.
inline double log_h(double z) {
  if (z > -3.0) return std::log(normal_pdf(z) + z * normal_cdf(z));
  const double t = -z;
  // 1 - t R(t) with R the Mills ratio, by continued fraction
  double one_minus_tr;
  if (t > 1e3) {
    one_minus_tr = (1.0 - 3.0 / (t * t)) / (t * t);
  } else {
    double frac = t;
    for (int k = 60; k >= 1; --k) frac = t + k / frac;
    const double R = 1.0 / frac;
    one_minus_tr = 1.0 - t * R;
  }
  return -0.5 * t * t - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(one_minus_tr);
}

inline double expected_improvement(double mean, double sigma, double best) {
  if (!(sigma > 1e-12)) return std::max(mean - best, 0.0);
  const double z = (mean - best) / sigma;
  return (mean - best) * normal_cdf(z) + sigma * normal_pdf(z);
}

inline double log_expected_improvement(double mean, double sigma, double best) {
  if (!(sigma > 1e-12)) {
    const double d = mean - best;
    return d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
  }
  return std::log(sigma) + log_h((mean - best) / sigma);
}

struct BoOptions {
  int n_initial = 30;
  int raw_samples = 256;
  int num_restarts = 10;
  bool ard = false;
  int fit_restarts = 3;
  int fit_iterations = 60;
  int refine_iterations = 30;

  static BoOptions resolve(const Json& o, Json& out) {
    BoOptions x;
    x.n_initial = take_option(o, out, "n_initial", x.n_initial);
    x.raw_samples = take_option(o, out, "raw_samples", x.raw_samples);
    x.num_restarts = take_option(o, out, "num_restarts", x.num_restarts);
    x.ard = take_option(o, out, "ard", x.ard);
    x.fit_restarts = take_option(o, out, "fit_restarts", x.fit_restarts);
    x.fit_iterations = take_option(o, out, "fit_iterations", x.fit_iterations);
    x.refine_iterations = take_option(o, out, "refine_iterations", x.refine_iterations);
    reject_unknown_options(o, out, "bo");
    require(x.n_initial >= 2, "bo: n_initial must be >= 2");
    require(x.raw_samples >= 1 && x.num_restarts >= 1, "bo: raw_samples and num_restarts must be >= 1");
    require(x.num_restarts <= x.raw_samples, "bo: num_restarts must not exceed raw_samples");
    require(x.fit_restarts >= 1 && x.fit_iterations >= 0 && x.refine_iterations >= 0, "bo: invalid fit settings");
    return x;
  }
};

class BayesOpt {
 public:
  BayesOpt(BoOptions opt, Rng rng) : opt_(opt), rng_(std::move(rng)) {}

  void run(BudgetedObjective& obj, const std::vector<Observation>& seeds) {
    const std::size_t d = obj.dim();
    for (const auto& s : seeds) {
      X_.push_back(s.u);
      y_.push_back(s.reward);
    }
    std::vector<double> u(d);
    while (static_cast<int>(X_.size()) < opt_.n_initial) {
      for (auto& v : u) v = rng_.uniform();
      observe(u, obj(u));
    }
    Rng fit_rng = rng_.split(1);
    Rng halton_rng = rng_.split(2);
    std::optional<GpHyper> warm;
    for (std::uint64_t iter = 0;; ++iter) {
      std::vector<std::size_t> finite;
      for (std::size_t i = 0; i < y_.size(); ++i) {
        if (std::isfinite(y_[i])) finite.push_back(i);
      }
      if (finite.size() < 2) {
        for (auto& v : u) v = rng_.uniform();
        observe(u, obj(u));
        continue;
      }
      const auto n = static_cast<Eigen::Index>(finite.size());
      GaussianProcess::Mat X(n, static_cast<Eigen::Index>(d));
      GaussianProcess::Vec y(n);
      double mean = 0.0;
      for (auto i : finite) mean += y_[i];
      mean /= static_cast<double>(n);
      double var = 0.0;
      for (auto i : finite) var += (y_[i] - mean) * (y_[i] - mean);
      double sd = std::sqrt(var / static_cast<double>(n));
      if (!(sd > 0.0)) sd = 1.0;
      double best = -std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < n; ++r) {
        const auto i = finite[static_cast<std::size_t>(r)];
        for (std::size_t j = 0; j < d; ++j) X(r, static_cast<Eigen::Index>(j)) = X_[i][j];
        y(r) = (y_[i] - mean) / sd;
        best = std::max(best, y(r));
      }
      GpFitOptions fo;
      fo.restarts = opt_.fit_restarts;
      fo.iterations = opt_.fit_iterations;
      gp_.fit(X, y, opt_.ard, fo, fit_rng, warm);
      warm = gp_.hyper();

      const std::vector<double> next = maximize_acquisition(best, halton_rng, iter);
      observe(next, obj(next));
    }
  }

  const GaussianProcess& model() const { return gp_; }

 private:
  void observe(const std::vector<double>& u, double reward) {
    X_.push_back(u);
    y_.push_back(reward);
  }

  double acquisition(std::span<const double> x, double best) const {
    const auto [m, v] = gp_.predict(x);
    return log_expected_improvement(m, std::sqrt(v), best);
  }

  std::vector<double> maximize_acquisition(double best, Rng& halton_rng, std::uint64_t iter) {
    const std::size_t d = X_.front().size();
    Rng shift = halton_rng.split(iter);
    HaltonSequence hs(d, shift);
    const auto ns = static_cast<std::size_t>(opt_.raw_samples);
    std::vector<std::vector<double>> cand(ns, std::vector<double>(d));
    std::vector<double> score(ns);
    for (std::size_t k = 0; k < ns; ++k) {
      hs.point(k + 1, cand[k]);
      score[k] = acquisition(cand[k], best);
    }
    std::vector<std::size_t> order(ns);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return score[a] > score[b]; });

    std::vector<double> best_x = cand[order[0]];
    double best_a = score[order[0]];
    const auto nr = static_cast<std::size_t>(opt_.num_restarts);
    for (std::size_t r = 0; r < nr; ++r) {
      std::vector<double> x = cand[order[r]];
      double a = score[order[r]];
      if (!std::isfinite(a)) continue;
      refine(x, a, best);
      if (a > best_a) {
        best_a = a;
        best_x = x;
      }
    }
    return best_x;
  }

  /// Projected gradient ascent with finite-difference gradients of log EI.
  void refine(std::vector<double>& x, double& a, double best) const {
    const std::size_t d = x.size();
    double step = 0.05;
    std::vector<double> g(d);
    std::vector<double> probe;
    for (int it = 0; it < opt_.refine_iterations && step > 1e-7; ++it) {
      const double h = 1e-6;
      double gn = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        probe = x;
        probe[j] = std::min(x[j] + h, 1.0);
        const double up = acquisition(probe, best);
        probe[j] = std::max(x[j] - h, 0.0);
        const double dn = acquisition(probe, best);
        const double width = std::min(x[j] + h, 1.0) - std::max(x[j] - h, 0.0);
        g[j] = (std::isfinite(up) && std::isfinite(dn)) ? (up - dn) / width : 0.0;
        gn = std::max(gn, std::abs(g[j]));
      }
      if (!(gn > 0.0)) break;
      std::vector<double> xn(d);
      for (std::size_t j = 0; j < d; ++j) xn[j] = std::clamp(x[j] + step * g[j] / gn, 0.0, 1.0);
      const double an = acquisition(xn, best);
      if (an > a) {
        x = std::move(xn);
        a = an;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
  }

  BoOptions opt_;
  Rng rng_;
  GaussianProcess gp_;
  std::vector<std::vector<double>> X_;
  std::vector<double> y_;
};

}  // namespace shapebench

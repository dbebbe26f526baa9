#pragma once

// (mu/mu_w, lambda)-CMA-ES with cumulative step-size adaptation.
//
// Defaults follow Hansen, "The CMA Evolution Strategy: A Tutorial" (2016):
//   lambda = 4 + floor(3 ln d),  mu = floor(lambda / 2)
//   w_i ~ ln((lambda + 1) / 2) - ln i,  normalized,  mu_eff = 1 / sum w_i^2
//   c_sigma = (mu_eff + 2) / (d + mu_eff + 5)
//   d_sigma = 1 + 2 max(0, sqrt((mu_eff - 1) / (d + 1)) - 1) + c_sigma
//   c_c     = (4 + mu_eff / d) / (d + 4 + 2 mu_eff / d)
//   c_1     = 2 / ((d + 1.3)^2 + mu_eff)
//   c_mu    = min(1 - c_1, 2 (mu_eff - 2 + 1 / mu_eff) / ((d + 2)^2 + mu_eff))
// Offspring are clipped into the cube before evaluation and the clipped
// points enter the update.

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <vector>

#include "shapebench/optimizers/types.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct CmaesOptions {
  int population = 0;  // 0: 4 + floor(3 ln d)
  double sigma0 = 0.3;

  static CmaesOptions resolve(const Json& o, Json& out, std::size_t dim) {
    CmaesOptions x;
    x.population = take_option(o, out, "population", x.population);
    x.sigma0 = take_option(o, out, "sigma0", x.sigma0);
    reject_unknown_options(o, out, "cmaes");
    require(x.population >= 0, "cmaes: population must be >= 0");
    require(x.sigma0 > 0.0, "cmaes: sigma0 must be > 0");
    if (x.population == 0) x.population = default_population(dim);
    require(x.population >= 2, "cmaes: population must be >= 2");
    out["population"] = x.population;
    out["parents"] = x.population / 2;
    return x;
  }

  static int default_population(std::size_t dim) {
    return 4 + static_cast<int>(std::floor(3.0 * std::log(static_cast<double>(std::max<std::size_t>(dim, 1)))));
  }
};

class Cmaes {
 public:
  using Vec = Eigen::VectorXd;
  using Mat = Eigen::MatrixXd;

  Cmaes(CmaesOptions opt, Rng rng) : opt_(opt), rng_(std::move(rng)) {}

  void run(BudgetedObjective& obj, const std::vector<Observation>& seeds) {
    const auto n = static_cast<Eigen::Index>(obj.dim());
    const double d = static_cast<double>(n);
    const int lambda = opt_.population;
    const int mu = lambda / 2;

    Vec w(mu);
    for (int i = 0; i < mu; ++i) w(i) = std::log((lambda + 1) / 2.0) - std::log(i + 1.0);
    w /= w.sum();
    const double mu_eff = 1.0 / w.squaredNorm();
    const double cs = (mu_eff + 2.0) / (d + mu_eff + 5.0);
    const double ds = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (d + 1.0)) - 1.0) + cs;
    const double cc = (4.0 + mu_eff / d) / (d + 4.0 + 2.0 * mu_eff / d);
    const double c1 = 2.0 / ((d + 1.3) * (d + 1.3) + mu_eff);
    const double cmu = std::min(1.0 - c1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((d + 2.0) * (d + 2.0) + mu_eff));
    const double chi_n = std::sqrt(d) * (1.0 - 1.0 / (4.0 * d) + 1.0 / (21.0 * d * d));

    Vec m(n);
    if (!seeds.empty()) {
      const auto best = std::max_element(seeds.begin(), seeds.end(),
                                         [](const auto& a, const auto& b) { return a.reward < b.reward; });
      for (Eigen::Index i = 0; i < n; ++i) m(i) = best->u[static_cast<std::size_t>(i)];
    } else {
      for (Eigen::Index i = 0; i < n; ++i) m(i) = rng_.uniform();
    }
    double sigma = opt_.sigma0;
    Mat C = Mat::Identity(n, n);
    Mat B = Mat::Identity(n, n);
    Vec D = Vec::Ones(n);
    Vec ps = Vec::Zero(n);
    Vec pc = Vec::Zero(n);
    min_eigenvalues_.clear();

    std::vector<Vec> xs(static_cast<std::size_t>(lambda));
    std::vector<double> f(static_cast<std::size_t>(lambda));
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int gen = 1;; ++gen) {
      for (int k = 0; k < lambda; ++k) {
        Vec z(n);
        for (Eigen::Index i = 0; i < n; ++i) z(i) = rng_.normal();
        Vec x = m + sigma * (B * D.asDiagonal() * z);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = std::clamp(x(i), 0.0, 1.0);
        xs[static_cast<std::size_t>(k)] = x;
      }
      for (int k = 0; k < lambda; ++k) {
        const Vec& x = xs[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = x(i);
        f[static_cast<std::size_t>(k)] = obj(u);
      }
      std::vector<int> order(static_cast<std::size_t>(lambda));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return f[static_cast<std::size_t>(a)] > f[static_cast<std::size_t>(b)];
      });

      const Vec m_old = m;
      m = Vec::Zero(n);
      for (int i = 0; i < mu; ++i) m += w(i) * xs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      const Vec step = (m - m_old) / sigma;

      // C^{-1/2} = B D^{-1} B^T
      const Vec Dinv = D.cwiseInverse();
      ps = (1.0 - cs) * ps + std::sqrt(cs * (2.0 - cs) * mu_eff) * (B * (Dinv.asDiagonal() * (B.transpose() * step)));
      const double ps_norm = ps.norm();
      const double ps_scale = std::sqrt(1.0 - std::pow(1.0 - cs, 2.0 * gen));
      const bool hsig = ps_norm / ps_scale / chi_n < 1.4 + 2.0 / (d + 1.0);
      pc = (1.0 - cc) * pc + (hsig ? std::sqrt(cc * (2.0 - cc) * mu_eff) : 0.0) * step;

      Mat rank_mu = Mat::Zero(n, n);
      for (int i = 0; i < mu; ++i) {
        const Vec y = (xs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] - m_old) / sigma;
        rank_mu += w(i) * y * y.transpose();
      }
      const double delta_h = hsig ? 0.0 : cc * (2.0 - cc);
      C = (1.0 - c1 - cmu) * C + c1 * (pc * pc.transpose() + delta_h * C) + cmu * rank_mu;
      C = 0.5 * (C + C.transpose());

      sigma *= std::exp((cs / ds) * (ps_norm / chi_n - 1.0));
      sigma = std::min(sigma, 1e3);

      Eigen::SelfAdjointEigenSolver<Mat> es(C);
      Vec ev = es.eigenvalues();
      B = es.eigenvectors();
      if (ev.minCoeff() < kEigenFloor) {
        obj.warn("cmaes: covariance re-conditioned at generation " + std::to_string(gen));
        for (Eigen::Index i = 0; i < n; ++i) ev(i) = std::max(ev(i), kEigenFloor);
        C = B * ev.asDiagonal() * B.transpose();
      }
      D = ev.cwiseSqrt();
      min_eigenvalues_.push_back(ev.minCoeff());
      // a collapsed search cannot move any more
      if (sigma * D.maxCoeff() < 1e-14) {
        obj.warn("cmaes: step size collapsed at generation " + std::to_string(gen));
        sigma = opt_.sigma0;
        C = Mat::Identity(n, n);
        B = Mat::Identity(n, n);
        D = Vec::Ones(n);
        ps.setZero();
        pc.setZero();
      }
    }
  }

  /// Smallest covariance eigenvalue after each generation of the last run.
  const std::vector<double>& min_eigenvalues() const { return min_eigenvalues_; }

  static constexpr double kEigenFloor = 1e-12;

 private:
  CmaesOptions opt_;
  Rng rng_;
  std::vector<double> min_eigenvalues_;
};

}  // namespace shapebench

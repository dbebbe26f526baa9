#pragma once

// Exact Gaussian-process regression with a Matern-5/2 kernel,
//
//   k(x, x') = sf2 (1 + sqrt(5) r + 5 r^2 / 3) exp(-sqrt(5) r),   r^2 = sum_j ((x_j - x'_j) / l_j)^2,
//
// one shared lengthscale unless `ard` is set. Hyperparameters
// (log l, log sf2, log sn2) are fitted by gradient ascent of the log marginal
// likelihood
//
//   L = -1/2 y^T K^-1 y - 1/2 log|K| - n/2 log(2 pi),
//   dL/dtheta = 1/2 tr((a a^T - K^-1) dK/dtheta),  a = K^-1 y.
//
// A step is kept only if it raises L, so the accepted sequence of each
// restart is nondecreasing.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct GpHyper {
  std::vector<double> log_lengthscale;  // size 1, or d with ARD
  double log_signal = 0.0;              // log sf2
  double log_noise = std::log(1e-6);    // log sn2

  double lengthscale(std::size_t j) const {
    return std::exp(log_lengthscale.size() == 1 ? log_lengthscale[0] : log_lengthscale[j]);
  }
};

struct GpFitOptions {
  int restarts = 3;
  int iterations = 60;
  double min_noise = 1e-6;
  double max_noise = 1.0;
  double min_lengthscale = 0.01;
  double max_lengthscale = 10.0;
  double min_signal = 0.05;
  double max_signal = 20.0;
};

class GaussianProcess {
 public:
  using Mat = Eigen::MatrixXd;
  using Vec = Eigen::VectorXd;

  static constexpr double kJitterStart = 1e-8;
  static constexpr double kJitterMax = 1e-4;

  static double matern52(double r) {
    const double a = std::sqrt(5.0) * r;
    return (1.0 + a + a * a / 3.0) * std::exp(-a);
  }

  /// Conditions on (X, y) with fixed hyperparameters. y is used as given.
  void condition(Mat X, Vec y, GpHyper h) {
    X_ = std::move(X);
    y_ = std::move(y);
    h_ = std::move(h);
    jitter_ = 0.0;
    if (!factorize(h_, L_, jitter_)) {
      throw EvaluationError("GP: covariance not positive definite with jitter up to 1e-4 (n=" +
                            std::to_string(X_.rows()) + ", noise=" + std::to_string(std::exp(h_.log_noise)) + ")");
    }
    alpha_ = L_.transpose().triangularView<Eigen::Upper>().solve(L_.triangularView<Eigen::Lower>().solve(y_));
  }

  /// Fits hyperparameters by multi-start gradient ascent, then conditions.
  /// `warm` seeds the first restart.
  void fit(Mat X, Vec y, bool ard, const GpFitOptions& opt, Rng& rng, const std::optional<GpHyper>& warm = {}) {
    X_ = std::move(X);
    y_ = std::move(y);
    const std::size_t d = static_cast<std::size_t>(X_.cols());
    const std::size_t nl = ard ? d : 1;
    histories_.clear();
    std::optional<GpHyper> best;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < opt.restarts; ++r) {
      GpHyper h;
      if (r == 0 && warm && warm->log_lengthscale.size() == nl) {
        h = *warm;
      } else if (r <= 1) {
        h.log_lengthscale.assign(nl, std::log(0.3));
        h.log_signal = 0.0;
        h.log_noise = std::log(1e-4);
      } else {
        h.log_lengthscale.resize(nl);
        for (auto& l : h.log_lengthscale) l = rng.uniform(std::log(0.05), std::log(2.0));
        h.log_signal = rng.uniform(std::log(0.3), std::log(3.0));
        h.log_noise = rng.uniform(std::log(1e-6), std::log(1e-2));
      }
      clamp_hyper(h, opt);
      std::vector<double> hist;
      const auto [hh, ll] = ascend(h, opt, hist);
      histories_.push_back(std::move(hist));
      if (ll > best_ll || !best) {
        best_ll = ll;
        best = hh;
      }
    }
    condition(X_, y_, *best);
  }

  /// Posterior mean and variance of the latent function at x.
  std::pair<double, double> predict(std::span<const double> x) const {
    const auto n = X_.rows();
    Vec k(n);
    for (Eigen::Index i = 0; i < n; ++i) k(i) = kernel(h_, X_.row(i), x);
    const double mean = k.dot(alpha_);
    const Vec v = L_.triangularView<Eigen::Lower>().solve(k);
    const double var = std::max(std::exp(h_.log_signal) - v.squaredNorm(), 0.0);
    return {mean, var};
  }

  double log_marginal_likelihood() const { return lml(h_).value_or(-std::numeric_limits<double>::infinity()); }

  /// Accepted log-likelihood values of each restart of the last fit().
  const std::vector<std::vector<double>>& histories() const { return histories_; }
  const GpHyper& hyper() const { return h_; }
  double jitter() const { return jitter_; }
  Eigen::Index size() const { return X_.rows(); }

 private:
  template <typename Row>
  static double sqdist(const GpHyper& h, const Row& a, std::span<const double> b) {
    double r2 = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double t = (a(static_cast<Eigen::Index>(j)) - b[j]) / h.lengthscale(j);
      r2 += t * t;
    }
    return r2;
  }

  template <typename Row>
  static double kernel(const GpHyper& h, const Row& a, std::span<const double> b) {
    return std::exp(h.log_signal) * matern52(std::sqrt(sqdist(h, a, b)));
  }

  Mat gram(const GpHyper& h) const {
    const auto n = X_.rows();
    const auto d = static_cast<std::size_t>(X_.cols());
    const double sf2 = std::exp(h.log_signal);
    Mat K(n, n);
    std::vector<double> xi(d);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) xi[j] = X_(i, static_cast<Eigen::Index>(j));
      K(i, i) = sf2;
      for (Eigen::Index k = 0; k < i; ++k) {
        K(i, k) = K(k, i) = sf2 * matern52(std::sqrt(sqdist(h, X_.row(k), xi)));
      }
    }
    return K;
  }

  bool factorize(const GpHyper& h, Mat& L, double& jitter_used) const {
    Mat K = gram(h);
    K.diagonal().array() += std::exp(h.log_noise);
    Eigen::LLT<Mat> llt(K);
    if (llt.info() == Eigen::Success) {
      L = llt.matrixL();
      jitter_used = 0.0;
      return true;
    }
    for (double j = kJitterStart; j <= kJitterMax * (1.0 + 1e-12); j *= 2.0) {
      Mat Kj = K;
      Kj.diagonal().array() += j;
      Eigen::LLT<Mat> l2(Kj);
      if (l2.info() == Eigen::Success) {
        L = l2.matrixL();
        jitter_used = j;
        return true;
      }
    }
    return false;
  }

  std::optional<double> lml(const GpHyper& h, std::vector<double>* grad = nullptr) const {
    Mat L;
    double jit = 0.0;
    if (!factorize(h, L, jit)) return std::nullopt;
    const auto n = X_.rows();
    const Vec a = L.transpose().triangularView<Eigen::Upper>().solve(L.triangularView<Eigen::Lower>().solve(y_));
    double ll = -0.5 * y_.dot(a) - L.diagonal().array().log().sum() - 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    if (!std::isfinite(ll)) return std::nullopt;
    if (grad) {
      const Mat Kinv = L.transpose().triangularView<Eigen::Upper>().solve(
          L.triangularView<Eigen::Lower>().solve(Mat::Identity(n, n)));
      const Mat W = a * a.transpose() - Kinv;  // dL/dK * 2
      const std::size_t nl = h.log_lengthscale.size();
      const auto d = static_cast<std::size_t>(X_.cols());
      grad->assign(nl + 2, 0.0);
      const double sf2 = std::exp(h.log_signal);
      std::vector<double> t2(d);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < i; ++k) {
          double r2 = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            const double t = (X_(i, static_cast<Eigen::Index>(j)) - X_(k, static_cast<Eigen::Index>(j))) / h.lengthscale(j);
            t2[j] = t * t;
            r2 += t2[j];
          }
          const double aa = std::sqrt(5.0 * r2);
          const double e = sf2 * std::exp(-aa) * (1.0 + aa) * (5.0 / 3.0);
          const double wik = W(i, k);  // symmetric pair counted twice below
          if (nl == 1) {
            (*grad)[0] += wik * e * r2;
          } else {
            for (std::size_t j = 0; j < d; ++j) (*grad)[j] += wik * e * t2[j];
          }
          (*grad)[nl] += wik * sf2 * matern52(std::sqrt(r2));
        }
        (*grad)[nl] += 0.5 * W(i, i) * sf2;
        (*grad)[nl + 1] += 0.5 * W(i, i) * std::exp(h.log_noise);
      }
    }
    return ll;
  }

  static std::vector<double> pack(const GpHyper& h) {
    std::vector<double> p = h.log_lengthscale;
    p.push_back(h.log_signal);
    p.push_back(h.log_noise);
    return p;
  }

  static GpHyper unpack(const std::vector<double>& p) {
    GpHyper h;
    h.log_lengthscale.assign(p.begin(), p.end() - 2);
    h.log_signal = p[p.size() - 2];
    h.log_noise = p.back();
    return h;
  }

  static void clamp_hyper(GpHyper& h, const GpFitOptions& o) {
    for (auto& l : h.log_lengthscale) l = std::clamp(l, std::log(o.min_lengthscale), std::log(o.max_lengthscale));
    h.log_signal = std::clamp(h.log_signal, std::log(o.min_signal), std::log(o.max_signal));
    h.log_noise = std::clamp(h.log_noise, std::log(o.min_noise), std::log(o.max_noise));
  }

  std::pair<GpHyper, double> ascend(GpHyper h, const GpFitOptions& opt, std::vector<double>& hist) const {
    std::vector<double> g;
    auto cur = lml(h, &g);
    if (!cur) {
      hist.push_back(-std::numeric_limits<double>::infinity());
      return {h, -std::numeric_limits<double>::infinity()};
    }
    hist.push_back(*cur);
    double step = 0.1;
    for (int it = 0; it < opt.iterations && step > 1e-6; ++it) {
      double gn = 0.0;
      for (double v : g) gn = std::max(gn, std::abs(v));
      if (gn < 1e-8) break;
      std::vector<double> p = pack(h);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += step * g[i] / gn;
      GpHyper cand = unpack(p);
      clamp_hyper(cand, opt);
      std::vector<double> gc;
      const auto next = lml(cand, &gc);
      if (next && *next > *cur) {
        h = std::move(cand);
        cur = next;
        g = std::move(gc);
        hist.push_back(*cur);
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
    return {h, *cur};
  }

  Mat X_;
  Vec y_;
  GpHyper h_;
  Mat L_;
  Vec alpha_;
  double jitter_ = 0.0;
  std::vector<std::vector<double>> histories_;
};

}  // namespace shapebench

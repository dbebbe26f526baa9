#pragma once

// Closed-form test functions exposed through the evaluator interface so the
// optimizers can be checked against known optima with the same runner.
// Each reports a single metric "f" computed from the continuous variables
// in space order.

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "shapebench/problems/evaluator.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

class AnalyticEvaluator : public Evaluator {
 public:
  static std::unique_ptr<AnalyticEvaluator> from_json(const Json& j, std::size_t n_vars) {
    auto e = std::make_unique<AnalyticEvaluator>();
    e->config_ = j;
    e->function_ = j.at("function").get<std::string>();
    e->n_ = n_vars;
    e->center_ = vector_param(j, "center", n_vars, 0.0);
    e->weights_ = vector_param(j, "weights", n_vars, 1.0);
    if (e->function_ == "rotated_quadratic") {
      e->rotation_ = random_rotation(n_vars, j.value("seed", std::uint64_t{7}));
      const double cond = j.value("condition", 100.0);
      e->eigen_.resize(static_cast<Eigen::Index>(n_vars));
      for (std::size_t i = 0; i < n_vars; ++i) {
        const double t = n_vars > 1 ? static_cast<double>(i) / static_cast<double>(n_vars - 1) : 0.0;
        e->eigen_(static_cast<Eigen::Index>(i)) = std::pow(cond, t);
      }
    } else if (e->function_ != "sphere" && e->function_ != "quadratic" && e->function_ != "rosenbrock" &&
               e->function_ != "forrester" && e->function_ != "linear") {
      throw ConfigError("unknown analytic function '" + e->function_ + "'");
    }
    return e;
  }

  Json describe() const override { return config_; }

  std::unique_ptr<Evaluator> clone() const override { return std::make_unique<AnalyticEvaluator>(*this); }

  Metrics evaluate(const ParamSpace& space, const DesignPoint& point, const OperatingPoint&) override {
    space.validate(point);
    std::vector<double> x;
    x.reserve(n_);
    for (const auto& v : space.variables()) {
      if (v.kind == VariableKind::continuous) x.push_back(point.number(v.name));
    }
    if (x.size() != n_) throw EvaluationError("analytic evaluator: dimension mismatch");
    return {{"f", value(x)}};
  }

  double value(const std::vector<double>& x) const {
    const std::size_t n = x.size();
    double f = 0.0;
    if (function_ == "sphere") {
      for (std::size_t i = 0; i < n; ++i) f += (x[i] - center_[i]) * (x[i] - center_[i]);
    } else if (function_ == "quadratic") {
      for (std::size_t i = 0; i < n; ++i) f += weights_[i] * (x[i] - center_[i]) * (x[i] - center_[i]);
    } else if (function_ == "linear") {
      for (std::size_t i = 0; i < n; ++i) f += weights_[i] * x[i];
    } else if (function_ == "rosenbrock") {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        f += 100.0 * a * a + b * b;
      }
    } else if (function_ == "forrester") {
      const double t = 6.0 * x[0] - 2.0;
      f = t * t * std::sin(12.0 * x[0] - 4.0);
    } else if (function_ == "rotated_quadratic") {
      Eigen::VectorXd d(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) d(static_cast<Eigen::Index>(i)) = x[i] - center_[i];
      const Eigen::VectorXd y = rotation_.transpose() * d;
      f = y.cwiseProduct(eigen_).dot(y);
    }
    return f;
  }

  /// Analytic gradient of value() with respect to x.
  std::vector<double> gradient(const std::vector<double>& x) const {
    const std::size_t n = x.size();
    std::vector<double> g(n, 0.0);
    if (function_ == "sphere") {
      for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * (x[i] - center_[i]);
    } else if (function_ == "quadratic") {
      for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * weights_[i] * (x[i] - center_[i]);
    } else if (function_ == "linear") {
      g = weights_;
    } else if (function_ == "rosenbrock") {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
        g[i + 1] += 200.0 * a;
      }
    } else if (function_ == "forrester") {
      const double t = 6.0 * x[0] - 2.0;
      g[0] = 12.0 * t * std::sin(12.0 * x[0] - 4.0) + 12.0 * t * t * std::cos(12.0 * x[0] - 4.0);
    } else if (function_ == "rotated_quadratic") {
      Eigen::VectorXd d(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) d(static_cast<Eigen::Index>(i)) = x[i] - center_[i];
      const Eigen::VectorXd y = rotation_.transpose() * d;
      const Eigen::VectorXd gx = 2.0 * rotation_ * y.cwiseProduct(eigen_);
      for (std::size_t i = 0; i < n; ++i) g[i] = gx(static_cast<Eigen::Index>(i));
    }
    return g;
  }

 private:
  static std::vector<double> vector_param(const Json& j, const char* key, std::size_t n, double fallback) {
    if (!j.contains(key)) return std::vector<double>(n, fallback);
    const auto& v = j.at(key);
    if (v.is_number()) return std::vector<double>(n, v.get<double>());
    auto out = v.get<std::vector<double>>();
    if (out.size() != n) throw ConfigError(std::string("analytic '") + key + "' needs one entry per variable");
    return out;
  }

  static Eigen::MatrixXd random_rotation(std::size_t n, std::uint64_t seed) {
    Rng rng(seed, 0x0707);
    Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) a(i, k) = rng.normal();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    return qr.householderQ();
  }

  Json config_;
  std::string function_;
  std::size_t n_ = 0;
  std::vector<double> center_;
  std::vector<double> weights_;
  Eigen::MatrixXd rotation_;
  Eigen::VectorXd eigen_;
};

}  // namespace shapebench

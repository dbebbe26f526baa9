#pragma once

// Deterministic stand-in aerodynamics.
//
// Every metric of a stand-in task is built from a smooth scalar field over
// the relaxed unit cube u in [0,1]^d:
//
//   g(u) = b + sum_j t_j (u_j - 1/2) + sum_i a_i exp(-1/2 sum_j ((u_j - c_ij) / s_ij)^2)
//   s(u) = 1 / (1 + exp(-g(u)))                                  in (0, 1)
//
// with 5..20 anisotropic Gaussian bumps drawn from Philox stream
// (task seed, 1000 + field index). The metric value is
//
//   m = lo + (hi - lo) s(u) + k_a (1 + g (s(u) - 1/2)) (alpha - alpha_ref)
//         + q_a (alpha - alpha_ref)^2 + k_M (M - M_ref)
//
// optionally scaled by (Re / Re_ref)^e. The gain |g| < 2 lets the design
// change the alpha slope without changing its sign. With k_a > 0 a lift metric is
// strictly increasing in alpha, which is what the alpha bisection needs
// (alpha_quad must be 0 on such a field).
// Bump widths are U(0.15, 0.45) * max(1, sqrt(d / 4)) per axis.

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapebench/problems/evaluator.hpp"
#include "shapebench/problems/formulas.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct FieldSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  double alpha_slope = 0.0;
  double alpha_gain = 0.0;
  double alpha_quad = 0.0;
  double alpha_ref = 0.0;
  double mach_slope = 0.0;
  double mach_ref = 0.0;
  double re_exponent = 0.0;
  double re_ref = 1.0e6;

  static FieldSpec from_json(const Json& j) {
    FieldSpec f;
    f.name = j.at("name").get<std::string>();
    f.lo = j.at("lo").get<double>();
    f.hi = j.at("hi").get<double>();
    f.alpha_slope = j.value("alpha_slope", 0.0);
    f.alpha_gain = j.value("alpha_gain", 0.0);
    f.alpha_quad = j.value("alpha_quad", 0.0);
    f.alpha_ref = j.value("alpha_ref", 0.0);
    f.mach_slope = j.value("mach_slope", 0.0);
    f.mach_ref = j.value("mach_ref", 0.0);
    f.re_exponent = j.value("re_exponent", 0.0);
    f.re_ref = j.value("re_ref", 1.0e6);
    if (!(f.lo < f.hi)) throw ConfigError("field '" + f.name + "': need lo < hi");
    if (std::abs(f.alpha_gain) >= 2.0) throw ConfigError("field '" + f.name + "': |alpha_gain| must be < 2");
    if (f.alpha_quad < 0.0) throw ConfigError("field '" + f.name + "': alpha_quad must be >= 0");
    return f;
  }

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["lo"] = lo;
    j["hi"] = hi;
    if (alpha_slope != 0.0) j["alpha_slope"] = alpha_slope;
    if (alpha_gain != 0.0) j["alpha_gain"] = alpha_gain;
    if (alpha_quad != 0.0) j["alpha_quad"] = alpha_quad;
    if (alpha_ref != 0.0) j["alpha_ref"] = alpha_ref;
    if (mach_slope != 0.0) j["mach_slope"] = mach_slope;
    if (mach_ref != 0.0) j["mach_ref"] = mach_ref;
    if (re_exponent != 0.0) {
      j["re_exponent"] = re_exponent;
      j["re_ref"] = re_ref;
    }
    return j;
  }

  /// Metric value from the field value `s` at an operating point.
  double value(double s, const OperatingPoint& op) const {
    const double da = op.alpha.value_or(alpha_ref) - alpha_ref;
    double m = lo + (hi - lo) * s + alpha_slope * (1.0 + alpha_gain * (s - 0.5)) * da + alpha_quad * da * da;
    if (mach_slope != 0.0) m += mach_slope * (op.mach.value_or(mach_ref) - mach_ref);
    if (re_exponent != 0.0 && op.reynolds) m *= std::pow(*op.reynolds / re_ref, re_exponent);
    return m;
  }

  /// Closed range of value() over s in [0,1] and alpha in [alpha_lo, alpha_hi].
  std::pair<double, double> range(const OperatingPoint& op, double alpha_lo, double alpha_hi) const {
    double lo_v = HUGE_VAL;
    double hi_v = -HUGE_VAL;
    std::vector<double> alphas{alpha_lo, alpha_hi};
    if (alpha_ref > alpha_lo && alpha_ref < alpha_hi) alphas.push_back(alpha_ref);
    for (double a : alphas) {
      for (double s : {0.0, 1.0}) {
        OperatingPoint o = op;
        o.alpha = a;
        const double v = value(s, o);
        lo_v = std::min(lo_v, v);
        hi_v = std::max(hi_v, v);
      }
    }
    return {lo_v, hi_v};
  }
};

/// One seeded bump field over the relaxed unit cube.
class BumpField {
 public:
  BumpField(std::size_t dim, Rng rng) : dim_(dim) {
    const double width_scale = std::max(1.0, std::sqrt(static_cast<double>(dim) / 4.0));
    const double trend_scale = 1.5 / std::sqrt(static_cast<double>(std::max<std::size_t>(dim, 1)));
    bias_ = 0.5 * rng.normal();
    trend_.resize(dim);
    for (auto& t : trend_) t = trend_scale * rng.normal();
    const auto n_bumps = 5 + static_cast<std::size_t>(rng.below(16));
    bumps_.resize(n_bumps);
    for (auto& b : bumps_) {
      b.amplitude = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
      b.center.resize(dim);
      b.inv_width2.resize(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        b.center[j] = rng.uniform();
        const double w = rng.uniform(0.15, 0.45) * width_scale;
        b.inv_width2[j] = 1.0 / (w * w);
      }
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t bump_count() const { return bumps_.size(); }

  /// Field value s(u) in (0, 1).
  double operator()(std::span<const double> u) const { return sigmoid(raw(u)); }

  /// Analytic gradient of s(u).
  void gradient(std::span<const double> u, std::span<double> out) const {
    const double s = sigmoid(raw(u));
    const double ds = s * (1.0 - s);
    for (std::size_t j = 0; j < dim_; ++j) out[j] = trend_[j];
    for (const auto& b : bumps_) {
      const double e = b.amplitude * std::exp(-0.5 * quad(b, u));
      for (std::size_t j = 0; j < dim_; ++j) out[j] -= e * (u[j] - b.center[j]) * b.inv_width2[j];
    }
    for (std::size_t j = 0; j < dim_; ++j) out[j] *= ds;
  }

 private:
  struct Bump {
    double amplitude = 0.0;
    std::vector<double> center;
    std::vector<double> inv_width2;
  };

  static double sigmoid(double g) { return 1.0 / (1.0 + std::exp(-g)); }

  static double quad(const Bump& b, std::span<const double> u) {
    double q = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      const double d = u[j] - b.center[j];
      q += d * d * b.inv_width2[j];
    }
    return q;
  }

  double raw(std::span<const double> u) const {
    if (u.size() != dim_) throw ContractError("BumpField: dimension mismatch");
    double g = bias_;
    for (std::size_t j = 0; j < dim_; ++j) g += trend_[j] * (u[j] - 0.5);
    for (const auto& b : bumps_) g += b.amplitude * std::exp(-0.5 * quad(b, u));
    return g;
  }

  std::size_t dim_;
  double bias_ = 0.0;
  std::vector<double> trend_;
  std::vector<Bump> bumps_;
};

/// Surface panels whose pressure and friction follow two landscape metrics;
/// reduced to an integrated drag coefficient with integrated_drag().
struct PanelModel {
  std::size_t count = 0;
  std::string cp_metric;
  std::string cfx_metric;
  std::string output;

  static PanelModel from_json(const Json& j) {
    PanelModel p;
    p.count = j.at("count").get<std::size_t>();
    p.cp_metric = j.at("cp_metric").get<std::string>();
    p.cfx_metric = j.at("cfx_metric").get<std::string>();
    p.output = j.at("output").get<std::string>();
    if (p.count == 0) throw ConfigError("panel model needs at least one cell");
    return p;
  }

  Json to_json() const {
    Json j;
    j["count"] = count;
    j["cp_metric"] = cp_metric;
    j["cfx_metric"] = cfx_metric;
    j["output"] = output;
    return j;
  }
};

class StandInLandscape : public Evaluator {
 public:
  StandInLandscape(std::uint64_t seed, std::size_t dim, std::vector<FieldSpec> fields, Metrics constants = {},
                   std::optional<PanelModel> panels = std::nullopt)
      : seed_(seed), dim_(dim), specs_(std::move(fields)), constants_(std::move(constants)), panels_(std::move(panels)) {
    for (std::size_t k = 0; k < specs_.size(); ++k) fields_.emplace_back(dim_, Rng(seed, 1000 + k));
    if (panels_) build_panels(Rng(seed, 999));
  }

  static std::unique_ptr<StandInLandscape> from_json(const Json& j, std::size_t dim) {
    std::vector<FieldSpec> fields;
    for (const auto& f : j.at("fields")) fields.push_back(FieldSpec::from_json(f));
    Metrics constants;
    if (j.contains("constants")) {
      for (const auto& [k, v] : j.at("constants").items()) constants[k] = v.get<double>();
    }
    std::optional<PanelModel> panels;
    if (j.contains("panels")) panels = PanelModel::from_json(j.at("panels"));
    return std::make_unique<StandInLandscape>(j.at("seed").get<std::uint64_t>(), dim, std::move(fields),
                                              std::move(constants), std::move(panels));
  }

  Json describe() const override {
    Json j;
    j["type"] = "stand_in";
    j["seed"] = seed_;
    Json fields = Json::array();
    for (const auto& f : specs_) fields.push_back(f.to_json());
    j["fields"] = fields;
    if (!constants_.empty()) j["constants"] = constants_;
    if (panels_) j["panels"] = panels_->to_json();
    return j;
  }

  std::unique_ptr<Evaluator> clone() const override { return std::make_unique<StandInLandscape>(*this); }

  Metrics evaluate(const ParamSpace& space, const DesignPoint& point, const OperatingPoint& op) override {
    return metrics_at(space.normalize(point), op);
  }

  Metrics metrics_at(std::span<const double> u, const OperatingPoint& op) const {
    Metrics m = constants_;
    for (std::size_t k = 0; k < specs_.size(); ++k) m[specs_[k].name] = specs_[k].value(fields_[k](u), op);
    if (panels_) m[panels_->output] = panel_drag(m.at(panels_->cp_metric), m.at(panels_->cfx_metric));
    return m;
  }

  /// Analytic gradient of field metric k with respect to u.
  void metric_gradient(std::size_t k, std::span<const double> u, const OperatingPoint& op, std::span<double> out) const {
    const FieldSpec& f = specs_.at(k);
    fields_.at(k).gradient(u, out);
    const double da = op.alpha.value_or(f.alpha_ref) - f.alpha_ref;
    double scale = f.hi - f.lo + f.alpha_slope * f.alpha_gain * da;
    if (f.re_exponent != 0.0 && op.reynolds) scale *= std::pow(*op.reynolds / f.re_ref, f.re_exponent);
    for (auto& g : out) g *= scale;
  }

  std::size_t dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<FieldSpec>& field_specs() const { return specs_; }
  const BumpField& field(std::size_t k) const { return fields_.at(k); }
  const Metrics& constants() const { return constants_; }

  std::optional<std::size_t> field_index(const std::string& name) const {
    for (std::size_t k = 0; k < specs_.size(); ++k) {
      if (specs_[k].name == name) return k;
    }
    return std::nullopt;
  }

  /// Cells at given panel-average pressure and friction levels.
  std::vector<SurfaceCell> panel_cells(double cp_level, double cfx_level) const {
    std::vector<SurfaceCell> cells = cells_;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      cells[i].cp = cp_offset_[i] + cp_level * cells[i].nx;
      cells[i].cfx = cfx_level * (1.0 + cfx_jitter_[i]);
    }
    return cells;
  }

  double panel_reference_area() const { return s_ref_; }

 private:
  void build_panels(Rng rng) {
    cells_.resize(panels_->count);
    cp_offset_.resize(panels_->count);
    cfx_jitter_.resize(panels_->count);
    double area = 0.0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      cells_[i].area = rng.uniform(0.5, 1.5) / static_cast<double>(cells_.size());
      cells_[i].nx = rng.uniform(-1.0, 1.0);
      cp_offset_[i] = 0.05 * rng.uniform(-1.0, 1.0);
      cfx_jitter_[i] = 0.2 * rng.uniform(-1.0, 1.0);
      area += cells_[i].area;
    }
    s_ref_ = 0.5 * area;
  }

  double panel_drag(double cp_level, double cfx_level) const {
    const auto cells = panel_cells(cp_level, cfx_level);
    return integrated_drag(cells, s_ref_);
  }

  std::uint64_t seed_;
  std::size_t dim_;
  std::vector<FieldSpec> specs_;
  std::vector<BumpField> fields_;
  Metrics constants_;
  std::optional<PanelModel> panels_;
  std::vector<SurfaceCell> cells_;
  std::vector<double> cp_offset_;
  std::vector<double> cfx_jitter_;
  double s_ref_ = 1.0;
};

}  // namespace shapebench

#pragma once

// ProblemEnvironment: one task of the catalog bound to an evaluator.
//
// evaluate() runs the evaluator at every operating point (solving alpha for
// a lift target first when the task asks for it), adds geometry, confidence
// and derived metrics, aggregates the objectives, measures every constraint
// as a fractional violation in [0, 1] and composes the penalized reward.
// Rewards are always in maximization sense; minimization tasks are negated.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"
#include "shapebench/param_space.hpp"
#include "shapebench/problems/airfoil_geometry.hpp"
#include "shapebench/problems/analytic.hpp"
#include "shapebench/problems/evaluator.hpp"
#include "shapebench/problems/expression.hpp"
#include "shapebench/problems/formulas.hpp"
#include "shapebench/problems/landscape.hpp"
#include "shapebench/problems/subprocess.hpp"

namespace shapebench {

enum class Aggregate { single, weighted_mean, weighted_sum, mean, min, max };

inline const char* to_string(Aggregate a) {
  switch (a) {
    case Aggregate::single: return "single";
    case Aggregate::weighted_mean: return "weighted_mean";
    case Aggregate::weighted_sum: return "weighted_sum";
    case Aggregate::mean: return "mean";
    case Aggregate::min: return "min";
    case Aggregate::max: return "max";
  }
  return "?";
}

inline Aggregate parse_aggregate(const std::string& s) {
  for (auto a : {Aggregate::single, Aggregate::weighted_mean, Aggregate::weighted_sum, Aggregate::mean, Aggregate::min,
                 Aggregate::max}) {
    if (s == to_string(a)) return a;
  }
  throw ConfigError("unknown aggregate '" + s + "'");
}

/// Combines per-point values. weighted_sum expects weights summing to one.
inline double aggregate(Aggregate a, std::span<const double> values, std::span<const double> weights) {
  if (values.empty()) throw ContractError("aggregate of no values");
  switch (a) {
    case Aggregate::single:
      if (values.size() != 1) throw ConfigError("'single' aggregate on a multi-point task");
      return values[0];
    case Aggregate::weighted_mean: return weighted_multipoint(values, weights);
    case Aggregate::weighted_sum: {
      if (values.size() != weights.size()) throw ContractError("weighted_sum: length mismatch");
      double s = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * values[i];
      return s;
    }
    case Aggregate::mean: return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    case Aggregate::min: return robust_min(values);
    case Aggregate::max: return *std::max_element(values.begin(), values.end());
  }
  return 0.0;
}

struct ObjectiveSpec {
  std::string name;
  Expression expr;
  Aggregate agg = Aggregate::single;
  Sense sense = Sense::maximize;
  double weight = 1.0;  // scalarization weight when a task has several objectives

  static ObjectiveSpec from_json(const Json& j) {
    ObjectiveSpec o;
    o.name = j.at("name").get<std::string>();
    o.expr = Expression(j.at("expr").get<std::string>());
    o.agg = parse_aggregate(j.value("aggregate", std::string("single")));
    o.sense = parse_sense(j.at("sense").get<std::string>());
    o.weight = j.value("weight", 1.0);
    if (!(o.weight >= 0.0)) throw ConfigError("objective weight must be >= 0");
    return o;
  }

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["expr"] = expr.source();
    j["aggregate"] = to_string(agg);
    j["sense"] = to_string(sense);
    j["weight"] = weight;
    return j;
  }
};

enum class ConstraintKind { inequality, equality, box };

inline const char* to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::inequality: return "inequality";
    case ConstraintKind::equality: return "equality";
    case ConstraintKind::box: return "box";
  }
  return "?";
}

/// A constraint on one expression. `scale` is the distance past the
/// boundary at which the violation saturates at 1 ("complete failure"):
///
///   inequality  value >= bound:   v = clamp((bound - value) / scale, 0, 1)
///   inequality  value <= bound:   v = clamp((value - bound) / scale, 0, 1)
///   equality    value == target:  v = min(1, |value - target| / scale)
///   box         lower <= value <= upper: distance outside, over scale
///
/// A non-finite value is a complete failure.
struct ConstraintSpec {
  std::string name;
  ConstraintKind kind = ConstraintKind::inequality;
  Expression expr;
  bool at_least = true;
  double bound = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double scale = 1.0;
  bool per_point = false;

  double violation(double value) const {
    if (!std::isfinite(value)) return 1.0;
    double d = 0.0;
    switch (kind) {
      case ConstraintKind::inequality: d = at_least ? bound - value : value - bound; break;
      case ConstraintKind::equality: d = std::abs(value - bound); break;
      case ConstraintKind::box: d = std::max(lower - value, value - upper); break;
    }
    return std::clamp(d / scale, 0.0, 1.0);
  }

  static ConstraintSpec from_json(const Json& j) {
    ConstraintSpec c;
    c.name = j.at("name").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    c.expr = Expression(j.at("expr").get<std::string>());
    c.scale = j.at("scale").get<double>();
    c.per_point = j.value("per_point", false);
    if (kind == "inequality") {
      c.kind = ConstraintKind::inequality;
      const std::string op = j.at("op").get<std::string>();
      if (op == ">=" || op == ">") {
        c.at_least = true;
      } else if (op == "<=" || op == "<") {
        c.at_least = false;
      } else {
        throw ConfigError("constraint '" + c.name + "': unknown operator '" + op + "'");
      }
      c.bound = j.at("bound").get<double>();
    } else if (kind == "equality") {
      c.kind = ConstraintKind::equality;
      c.bound = j.at("target").get<double>();
    } else if (kind == "box") {
      c.kind = ConstraintKind::box;
      c.lower = j.at("lower").get<double>();
      c.upper = j.at("upper").get<double>();
      if (!(c.lower <= c.upper)) throw ConfigError("constraint '" + c.name + "': lower > upper");
    } else {
      throw ConfigError("constraint '" + c.name + "': unknown kind '" + kind + "'");
    }
    if (!(c.scale > 0.0)) throw ConfigError("constraint '" + c.name + "': scale must be > 0");
    return c;
  }

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["kind"] = to_string(kind);
    j["expr"] = expr.source();
    if (kind == ConstraintKind::inequality) {
      j["op"] = at_least ? ">=" : "<=";
      j["bound"] = bound;
    } else if (kind == ConstraintKind::equality) {
      j["target"] = bound;
    } else {
      j["lower"] = lower;
      j["upper"] = upper;
    }
    j["scale"] = scale;
    if (per_point) j["per_point"] = true;
    return j;
  }
};

struct AlphaSolve {
  std::string cl_metric = "CL";
  double lo = -5.0;
  double hi = 12.0;
  int iters = 8;
};

struct StaticMarginSpec {
  double delta_alpha = 0.5;  // deg
  std::string cl_metric = "CL";
  std::string cm_metric = "CM";
  std::string output = "Kn";
};

struct CstGeometrySpec {
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  std::string leading_edge;
  std::string te_thickness;

  KulfanAirfoil airfoil(const DesignPoint& p) const {
    KulfanAirfoil a;
    for (const auto& n : upper) a.upper.push_back(p.number(n));
    for (const auto& n : lower) a.lower.push_back(p.number(n));
    if (!leading_edge.empty()) a.leading_edge_weight = p.number(leading_edge);
    if (!te_thickness.empty()) a.te_thickness = p.number(te_thickness);
    return a;
  }
};

struct DerivedMetric {
  std::string name;
  Expression expr;
};

struct EvalResult {
  Metrics metrics;
  std::vector<Metrics> per_point;
  std::map<std::string, double> violations;
  std::vector<double> objectives;  // native sense, catalog order
  double raw = 0.0;                // scalarized objective before penalty, native sense
  double reward = -std::numeric_limits<double>::infinity();
  bool feasible = false;
  double confidence = 0.0;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }

  double max_violation() const {
    double m = 0.0;
    for (const auto& [k, v] : violations) m = std::max(m, v);
    return m;
  }

  Json to_json() const {
    Json j;
    j["reward"] = ok() ? Json(reward) : Json(nullptr);
    j["feasible"] = feasible;
    j["confidence"] = confidence;
    j["raw_objective"] = raw;
    j["objectives"] = objectives;
    j["metrics"] = metrics;
    j["violations"] = violations;
    j["per_point"] = per_point;
    if (error) j["error"] = *error;
    return j;
  }
};

/// Distance-to-boundary confidence proxy: 1 at the centre of the unit cube,
/// 0.85 at its corners.
inline double box_confidence(std::span<const double> u) {
  if (u.empty()) return 1.0;
  double s = 0.0;
  for (double x : u) s += (2.0 * x - 1.0) * (2.0 * x - 1.0);
  return 1.0 - 0.15 * s / static_cast<double>(u.size());
}

std::unique_ptr<Evaluator> make_evaluator(const Json& j, const ParamSpace& space);

class ProblemEnvironment {
 public:
  ProblemEnvironment() = default;

  /// Builds the task from its catalog entry; the evaluator comes from the
  /// entry's "evaluator" object unless one is passed in.
  static ProblemEnvironment from_json(const Json& j, std::unique_ptr<Evaluator> evaluator = nullptr) {
    ProblemEnvironment e;
    e.definition_ = j;
    e.id_ = j.at("id").get<std::string>();
    e.category_ = j.value("category", std::string("continuous"));
    e.group_ = j.value("environment", e.id_);
    e.description_ = j.value("description", std::string{});
    e.space_ = ParamSpace::from_json(j.at("space"));
    for (const auto& p : j.at("points")) e.points_.push_back(OperatingPoint::from_json(p));
    if (e.points_.empty()) throw ConfigError(e.id_ + ": at least one operating point is required");
    if (j.contains("alpha_solve")) {
      const auto& a = j.at("alpha_solve");
      e.alpha_solve_ = AlphaSolve{a.value("cl_metric", std::string("CL")), a.at("lo").get<double>(),
                                  a.at("hi").get<double>(), a.at("iters").get<int>()};
      if (!(e.alpha_solve_->lo < e.alpha_solve_->hi) || e.alpha_solve_->iters < 1) {
        throw ConfigError(e.id_ + ": invalid alpha_solve bracket");
      }
    }
    e.reynolds_schedule_ = j.value("reynolds_schedule", false);
    if (j.contains("static_margin")) {
      const auto& s = j.at("static_margin");
      StaticMarginSpec sm;
      sm.delta_alpha = s.value("delta_alpha", 0.5);
      sm.cl_metric = s.value("cl_metric", std::string("CL"));
      sm.cm_metric = s.value("cm_metric", std::string("CM"));
      sm.output = s.value("output", std::string("Kn"));
      if (!(sm.delta_alpha > 0.0)) throw ConfigError(e.id_ + ": static margin needs delta_alpha > 0");
      e.static_margin_ = sm;
    }
    if (j.contains("geometry")) {
      const auto& g = j.at("geometry");
      if (g.at("type").get<std::string>() != "cst_airfoil") throw ConfigError(e.id_ + ": unknown geometry type");
      CstGeometrySpec c;
      c.upper = g.at("upper").get<std::vector<std::string>>();
      c.lower = g.at("lower").get<std::vector<std::string>>();
      c.leading_edge = g.value("leading_edge", std::string{});
      c.te_thickness = g.value("te_thickness", std::string{});
      e.geometry_ = c;
    }
    if (j.contains("derived")) {
      for (const auto& d : j.at("derived")) {
        e.derived_.push_back({d.at("name").get<std::string>(), Expression(d.at("expr").get<std::string>())});
      }
    }
    for (const auto& o : j.at("objectives")) e.objectives_.push_back(ObjectiveSpec::from_json(o));
    if (e.objectives_.empty()) throw ConfigError(e.id_ + ": at least one objective is required");
    if (j.contains("constraints")) {
      for (const auto& c : j.at("constraints")) e.constraints_.push_back(ConstraintSpec::from_json(c));
    }
    e.penalty_weight_ = j.value("penalty_weight", 0.0);
    if (!(e.penalty_weight_ >= 0.0) || !std::isfinite(e.penalty_weight_)) {
      throw ConfigError(e.id_ + ": penalty_weight must be finite and >= 0");
    }
    if (j.contains("diagnostics")) e.diagnostics_ = j.at("diagnostics");
    e.evaluator_ = evaluator ? std::move(evaluator) : make_evaluator(j.at("evaluator"), e.space_);
    return e;
  }

  ProblemEnvironment(const ProblemEnvironment& o) { *this = o; }

  ProblemEnvironment& operator=(const ProblemEnvironment& o) {
    if (this == &o) return *this;
    definition_ = o.definition_;
    id_ = o.id_;
    category_ = o.category_;
    group_ = o.group_;
    description_ = o.description_;
    space_ = o.space_;
    points_ = o.points_;
    alpha_solve_ = o.alpha_solve_;
    reynolds_schedule_ = o.reynolds_schedule_;
    static_margin_ = o.static_margin_;
    geometry_ = o.geometry_;
    derived_ = o.derived_;
    objectives_ = o.objectives_;
    constraints_ = o.constraints_;
    penalty_weight_ = o.penalty_weight_;
    diagnostics_ = o.diagnostics_;
    evaluator_ = o.evaluator_ ? o.evaluator_->clone() : nullptr;
    evaluations_ = 0;
    return *this;
  }

  ProblemEnvironment(ProblemEnvironment&&) noexcept = default;
  ProblemEnvironment& operator=(ProblemEnvironment&&) noexcept = default;

  const std::string& id() const { return id_; }
  const std::string& category() const { return category_; }
  const std::string& group() const { return group_; }
  const std::string& description() const { return description_; }
  const ParamSpace& space() const { return space_; }
  const std::vector<OperatingPoint>& points() const { return points_; }
  const std::vector<ObjectiveSpec>& objectives() const { return objectives_; }
  const std::vector<ConstraintSpec>& constraints() const { return constraints_; }
  const std::optional<AlphaSolve>& alpha_solve() const { return alpha_solve_; }
  double penalty_weight() const { return penalty_weight_; }
  const Json& definition() const { return definition_; }
  const Json& diagnostics_profile() const { return diagnostics_; }
  Evaluator& evaluator() { return *evaluator_; }
  const Evaluator& evaluator() const { return *evaluator_; }

  void set_evaluator(std::unique_ptr<Evaluator> ev) { evaluator_ = std::move(ev); }

  bool multi_objective() const { return objectives_.size() > 1; }

  /// Sense of the scalarized objective: the objective's own for one
  /// objective, maximize for a weighted combination.
  Sense sense() const { return multi_objective() ? Sense::maximize : objectives_.front().sense; }

  std::vector<Sense> objective_senses() const {
    std::vector<Sense> s;
    for (const auto& o : objectives_) s.push_back(o.sense);
    return s;
  }

  std::size_t evaluation_count() const { return evaluations_; }
  void reset_evaluation_count() { evaluations_ = 0; }

  EvalResult evaluate_unit(std::span<const double> u) {
    DesignPoint p = space_.denormalize(u);
    return evaluate(p);
  }

  /// One budget unit. Invalid points throw SpaceError without being
  /// charged; evaluator failures produce a result with `error` set.
  EvalResult evaluate(const DesignPoint& point) {
    space_.validate(point);
    ++evaluations_;
    EvalResult r;
    try {
      compute(point, r);
    } catch (const EvaluationError& e) {
      return failed(std::move(r), e.what());
    } catch (const std::out_of_range& e) {
      return failed(std::move(r), std::string("missing metric: ") + e.what());
    } catch (const ContractError& e) {
      return failed(std::move(r), e.what());
    }
    return r;
  }

 private:
  static EvalResult failed(EvalResult r, std::string what) {
    r.error = std::move(what);
    r.reward = -std::numeric_limits<double>::infinity();
    r.feasible = false;
    r.confidence = 0.0;
    return r;
  }

  Metrics run_point(const DesignPoint& point, OperatingPoint& op) {
    if (reynolds_schedule_ && op.cl_target) op.reynolds = reynolds_schedule(*op.cl_target);
    Metrics m;
    if (alpha_solve_ && op.cl_target) {
      const AlphaSolve& a = *alpha_solve_;
      auto cl_at = [&](double alpha) {
        OperatingPoint o = op;
        o.alpha = alpha;
        return require(evaluator_->evaluate(space_, point, o), a.cl_metric);
      };
      const BisectionResult b = bisect_alpha_to_cl(cl_at, *op.cl_target, a.lo, a.hi, a.iters);
      op.alpha = b.alpha;
      m = evaluator_->evaluate(space_, point, op);
      m["alpha"] = b.alpha;
      m["cl_residual"] = require(m, a.cl_metric) - *op.cl_target;
      m["bracketed"] = b.bracketed ? 1.0 : 0.0;
    } else {
      m = evaluator_->evaluate(space_, point, op);
    }
    if (static_margin_) {
      const StaticMarginSpec& s = *static_margin_;
      OperatingPoint o = op;
      o.alpha = op.alpha.value_or(0.0) + s.delta_alpha;
      const Metrics m2 = evaluator_->evaluate(space_, point, o);
      const double dcl = require(m2, s.cl_metric) - require(m, s.cl_metric);
      const double dcm = require(m2, s.cm_metric) - require(m, s.cm_metric);
      m[s.output] = -dcm / dcl;
    }
    return m;
  }

  static double require(const Metrics& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw EvaluationError("evaluator did not report '" + key + "'");
    if (!std::isfinite(it->second)) throw EvaluationError("metric '" + key + "' is not finite");
    return it->second;
  }

  void compute(const DesignPoint& point, EvalResult& r) {
    Metrics design_metrics;
    if (geometry_) {
      const KulfanAirfoil af = geometry_->airfoil(point);
      design_metrics["t_min"] = af.min_thickness();
      design_metrics["t_033"] = af.thickness(0.33);
      design_metrics["t_090"] = af.thickness(0.90);
      design_metrics["te_wedge"] = af.te_wedge_angle();
      design_metrics["le_angle"] = af.le_angle();
      design_metrics["wiggliness"] = af.wiggliness();
      design_metrics["wiggliness_ref"] = naca0012_wiggliness();
    }
    const double conf = box_confidence(space_.normalize(point));

    auto design_value = [&](std::string_view name) -> std::optional<double> {
      auto it = point.values.find(std::string(name));
      if (it == point.values.end()) return std::nullopt;
      if (const auto* d = std::get_if<double>(&it->second)) return *d;
      return std::nullopt;
    };

    std::vector<OperatingPoint> resolved;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      OperatingPoint op = points_[k];
      Metrics m = run_point(point, op);
      for (const auto& [key, v] : design_metrics) m.try_emplace(key, v);
      m.try_emplace("confidence", conf);
      auto lookup = [&](std::string_view name) -> std::optional<double> {
        if (auto it = m.find(std::string(name)); it != m.end()) return it->second;
        if (auto f = op.field(name)) return f;
        return design_value(name);
      };
      for (const auto& d : derived_) {
        if (!m.count(d.name)) m[d.name] = d.expr.evaluate(lookup);
      }
      r.per_point.push_back(std::move(m));
      resolved.push_back(op);
    }

    Metrics task;
    if (alpha_solve_) {
      // alpha must rise with the lift target across the solved points
      std::vector<std::pair<double, double>> solved;
      for (std::size_t k = 0; k < resolved.size(); ++k) {
        if (resolved[k].cl_target) solved.emplace_back(*resolved[k].cl_target, r.per_point[k].at("alpha"));
      }
      std::stable_sort(solved.begin(), solved.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      double gap = 0.0;
      for (std::size_t k = 1; k < solved.size(); ++k) {
        if (solved[k].first > solved[k - 1].first) gap = std::max(gap, solved[k - 1].second - solved[k].second);
      }
      task["alpha_monotone_gap"] = gap;
    }

    std::vector<double> weights;
    for (const auto& op : points_) weights.push_back(op.weight);
    for (std::size_t i = 0; i < objectives_.size(); ++i) {
      const auto& o = objectives_[i];
      std::vector<double> vals;
      for (std::size_t k = 0; k < points_.size(); ++k) {
        const Metrics& m = r.per_point[k];
        const OperatingPoint& op = resolved[k];
        vals.push_back(o.expr.evaluate([&](std::string_view name) -> std::optional<double> {
          if (auto it = m.find(std::string(name)); it != m.end()) return it->second;
          if (auto f = op.field(name)) return f;
          return design_value(name);
        }));
      }
      const double f = aggregate(o.agg, vals, weights);
      if (!std::isfinite(f)) throw EvaluationError("objective '" + o.name + "' is not finite");
      r.objectives.push_back(f);
      task[o.name] = f;
    }

    auto task_lookup = [&](std::string_view name) -> std::optional<double> {
      if (auto it = task.find(std::string(name)); it != task.end()) return it->second;
      if (r.per_point.size() == 1) {
        const Metrics& m = r.per_point.front();
        if (auto it = m.find(std::string(name)); it != m.end()) return it->second;
        if (auto f = resolved.front().field(name)) return f;
      }
      if (auto it = design_metrics.find(std::string(name)); it != design_metrics.end()) return it->second;
      return design_value(name);
    };

    for (const auto& c : constraints_) {
      double v = 0.0;
      if (c.per_point) {
        for (std::size_t k = 0; k < points_.size(); ++k) {
          const Metrics& m = r.per_point[k];
          const OperatingPoint& op = resolved[k];
          const double x = c.expr.evaluate([&](std::string_view name) -> std::optional<double> {
            if (auto it = m.find(std::string(name)); it != m.end()) return it->second;
            if (auto f = op.field(name)) return f;
            return design_value(name);
          });
          v = std::max(v, c.violation(x));
        }
      } else {
        v = c.violation(c.expr.evaluate(task_lookup));
      }
      r.violations[c.name] = v;
    }

    if (multi_objective()) {
      double s = 0.0;
      for (std::size_t i = 0; i < objectives_.size(); ++i) {
        const double f = r.objectives[i];
        s += objectives_[i].weight * (objectives_[i].sense == Sense::maximize ? f : -f);
      }
      r.raw = s;
    } else {
      r.raw = r.objectives.front();
    }
    const Sense s = sense();
    const double penalized = penalized_reward(r.raw, r.violations, penalty_weight_, s);
    r.reward = s == Sense::maximize ? penalized : -penalized;
    if (!std::isfinite(r.reward)) throw EvaluationError("reward is not finite");
    r.feasible = r.max_violation() == 0.0;

    r.confidence = 1.0;
    for (const auto& m : r.per_point) r.confidence = std::min(r.confidence, std::clamp(m.at("confidence"), 0.0, 1.0));

    if (r.per_point.size() == 1) r.metrics = r.per_point.front();
    for (const auto& [k, v] : task) r.metrics[k] = v;
    r.metrics["raw_objective"] = r.raw;
    r.metrics["penalty"] = std::abs(penalized - r.raw);
    r.metrics["objective"] = penalized;
  }

  Json definition_;
  std::string id_;
  std::string category_;
  std::string group_;
  std::string description_;
  ParamSpace space_;
  std::vector<OperatingPoint> points_;
  std::optional<AlphaSolve> alpha_solve_;
  bool reynolds_schedule_ = false;
  std::optional<StaticMarginSpec> static_margin_;
  std::optional<CstGeometrySpec> geometry_;
  std::vector<DerivedMetric> derived_;
  std::vector<ObjectiveSpec> objectives_;
  std::vector<ConstraintSpec> constraints_;
  double penalty_weight_ = 0.0;
  Json diagnostics_;
  std::unique_ptr<Evaluator> evaluator_;
  std::size_t evaluations_ = 0;
};

inline std::unique_ptr<Evaluator> make_evaluator(const Json& j, const ParamSpace& space) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "stand_in") return StandInLandscape::from_json(j, space.relaxed_dim());
  if (type == "analytic") return AnalyticEvaluator::from_json(j, space.count(VariableKind::continuous));
  if (type == "subprocess") {
    return std::make_unique<SubprocessEvaluator>(j.at("command").get<std::string>(), j.value("timeout_s", 300.0));
  }
  throw ConfigError("unknown evaluator type '" + type + "'");
}

}  // namespace shapebench

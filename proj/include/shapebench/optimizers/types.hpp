#pragma once

// Shared optimizer vocabulary: configuration, trajectory records and the
// budgeted objective every method evaluates through.
//
// Optimizers work on the relaxed unit cube and always maximize reward.
// BudgetedObjective is the only path to the environment, so the evaluation
// count it records is the count the environment sees. When the budget is
// spent it throws BudgetExhausted, which the runner catches; methods never
// have to check the budget themselves mid-step.

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"
#include "shapebench/problems/environment.hpp"

namespace shapebench {

enum class Method { lbfgsb, pso, cmaes, bo, evolve };

inline constexpr Method kAllMethods[] = {Method::lbfgsb, Method::pso, Method::cmaes, Method::bo, Method::evolve};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::lbfgsb: return "lbfgsb";
    case Method::pso: return "pso";
    case Method::cmaes: return "cmaes";
    case Method::bo: return "bo";
    case Method::evolve: return "evolve";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : kAllMethods) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown method '" + s + "' (expected lbfgsb, pso, cmaes, bo or evolve)");
}

struct OptimizerConfig {
  Method method = Method::cmaes;
  std::size_t budget = 3000;
  std::uint64_t seed = 42;
  Json options = Json::object();  // method-specific overrides
  std::vector<DesignPoint> warmstart;
  bool record_wall_time = false;
};

struct EvalRecord {
  std::size_t index = 0;
  std::string design_id;
  double reward = -std::numeric_limits<double>::infinity();
  double best_so_far = -std::numeric_limits<double>::infinity();
  bool feasible = false;
  double wall_ms = 0.0;
  std::optional<std::string> error;
  DesignPoint design;
};

struct Trajectory {
  std::vector<EvalRecord> evals;
  Json resolved_config = Json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::optional<std::string> failure;  // set when the run aborted

  std::size_t size() const { return evals.size(); }

  double best_reward() const {
    return evals.empty() ? -std::numeric_limits<double>::infinity() : evals.back().best_so_far;
  }

  /// Index of the first evaluation that reached the final best.
  std::optional<std::size_t> best_index() const {
    std::optional<std::size_t> idx;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& e : evals) {
      if (!e.error && (!idx || e.reward > best)) {
        best = e.reward;
        idx = e.index;
      }
    }
    return idx;
  }

  std::size_t error_count() const {
    return static_cast<std::size_t>(std::count_if(evals.begin(), evals.end(), [](const auto& e) { return e.error.has_value(); }));
  }
};

struct BudgetExhausted {};

inline std::string design_id_for(std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return "iter_" + digits;
}

/// A point already evaluated before the method started (warm starts).
struct Observation {
  std::vector<double> u;
  double reward;
};

/// Called once per completed evaluation, in order.
using RecordSink = std::function<void(const EvalRecord&)>;

class BudgetedObjective {
 public:
  BudgetedObjective(ProblemEnvironment& env, std::size_t budget, Trajectory& traj, bool wall_time = false)
      : env_(env), budget_(budget), traj_(traj), wall_time_(wall_time) {}

  std::size_t dim() const { return env_.space().relaxed_dim(); }
  std::size_t budget() const { return budget_; }
  std::size_t used() const { return traj_.evals.size(); }
  std::size_t remaining() const { return budget_ - used(); }
  bool exhausted() const { return used() >= budget_; }
  ProblemEnvironment& environment() { return env_; }

  /// Reward at a unit-cube point (clamped into the cube first).
  double operator()(std::span<const double> u) {
    std::vector<double> x(u.begin(), u.end());
    for (auto& v : x) {
      if (!std::isfinite(v)) throw ContractError("optimizer proposed a non-finite coordinate");
      v = std::clamp(v, 0.0, 1.0);
    }
    return evaluate(env_.space().denormalize(x));
  }

  double evaluate(const DesignPoint& design) {
    if (exhausted()) throw BudgetExhausted{};
    const auto t0 = std::chrono::steady_clock::now();
    EvalResult r = env_.evaluate(design);
    EvalRecord rec;
    rec.index = traj_.evals.size();
    rec.design_id = design_id_for(rec.index);
    rec.reward = r.ok() ? r.reward : -std::numeric_limits<double>::infinity();
    rec.feasible = r.ok() && r.feasible;
    rec.error = r.error;
    rec.design = design;
    rec.design.name = rec.design_id;
    if (wall_time_) {
      rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    const double prev = traj_.evals.empty() ? -std::numeric_limits<double>::infinity() : traj_.evals.back().best_so_far;
    rec.best_so_far = std::max(prev, rec.reward);
    if (rec.reward > best_reward_ || best_u_.empty()) {
      best_reward_ = rec.reward;
      best_u_ = env_.space().normalize(design);
    }
    traj_.evals.push_back(std::move(rec));
    if (sink_) sink_(traj_.evals.back());
    return traj_.evals.back().reward;
  }

  double best_reward() const { return best_reward_; }
  const std::vector<double>& best_u() const { return best_u_; }

  void warn(std::string message) { traj_.warnings.push_back(std::move(message)); }
  void set_sink(RecordSink sink) { sink_ = std::move(sink); }

 private:
  ProblemEnvironment& env_;
  std::size_t budget_;
  Trajectory& traj_;
  bool wall_time_;
  double best_reward_ = -std::numeric_limits<double>::infinity();
  std::vector<double> best_u_;
  RecordSink sink_;
};

/// Reads an option with a default and records the resolved value.
template <typename T>
T take_option(const Json& options, Json& resolved, const char* key, T fallback) {
  T v = fallback;
  if (options.contains(key)) {
    try {
      v = options.at(key).get<T>();
    } catch (const Json::exception&) {
      throw ConfigError(std::string("option '") + key + "' has the wrong type");
    }
  }
  resolved[key] = v;
  return v;
}

inline void reject_unknown_options(const Json& options, const Json& resolved, const char* method) {
  for (const auto& [k, v] : options.items()) {
    if (!resolved.contains(k)) throw ConfigError(std::string("unknown option '") + k + "' for method " + method);
  }
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace shapebench

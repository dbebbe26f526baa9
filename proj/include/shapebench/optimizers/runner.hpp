#pragma once

// The common budget protocol: validate the configuration, evaluate warm
// starts first (charged), hand the remainder to the method, and stop it the
// moment the budget is spent.

#include <filesystem>
#include <sstream>

#include "shapebench/format.hpp"
#include "shapebench/optimizers/bayesopt.hpp"
#include "shapebench/optimizers/cmaes.hpp"
#include "shapebench/optimizers/evolve.hpp"
#include "shapebench/optimizers/lbfgsb.hpp"
#include "shapebench/optimizers/pso.hpp"
#include "shapebench/optimizers/types.hpp"
#include "shapebench/problems/analytic.hpp"
#include "shapebench/version.hpp"

namespace shapebench {

/// Reward gradient in unit coordinates for analytic tasks without
/// constraints; empty when the task has none.
inline RewardGradient analytic_reward_gradient(const ProblemEnvironment& env) {
  const auto* an = dynamic_cast<const AnalyticEvaluator*>(&env.evaluator());
  if (an == nullptr || env.objectives().size() != 1 || !env.constraints().empty()) return {};
  if (env.objectives().front().expr.source() != "f") return {};
  const ParamSpace& space = env.space();
  if (space.count(VariableKind::continuous) != space.size()) return {};
  const double sign = env.objectives().front().sense == Sense::maximize ? 1.0 : -1.0;
  return [an, &space, sign](std::span<const double> u) {
    std::vector<double> x(u.size());
    std::vector<double> width(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto& v = space.variables()[i];
      width[i] = v.upper - v.lower;
      x[i] = v.lower + width[i] * std::clamp(u[i], 0.0, 1.0);
    }
    std::vector<double> g = an->gradient(x);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] *= sign * width[i];
    return g;
  };
}

/// Checks the configuration against the task and returns the resolved
/// method options. Throws ConfigError before anything is evaluated.
inline Json resolve_options(const ProblemEnvironment& env, const OptimizerConfig& cfg) {
  require(cfg.budget >= 1, "budget must be >= 1");
  require(env.space().relaxed_dim() >= 1, "task has an empty design space");
  if (!cfg.options.is_object()) throw ConfigError("method options must be a JSON object");
  Json out = Json::object();
  switch (cfg.method) {
    case Method::lbfgsb: {
      if (!env.space().has_continuous()) {
        throw ConfigError("lbfgsb needs at least one continuous variable; task '" + env.id() + "' has none");
      }
      const auto o = LbfgsbOptions::resolve(cfg.options, out);
      if (o.exact_gradient && !analytic_reward_gradient(env)) {
        throw ConfigError("lbfgsb: exact_gradient needs an unconstrained analytic task");
      }
      break;
    }
    case Method::pso: PsoOptions::resolve(cfg.options, out, cfg.budget); break;
    case Method::cmaes: CmaesOptions::resolve(cfg.options, out, env.space().relaxed_dim()); break;
    case Method::bo: BoOptions::resolve(cfg.options, out); break;
    case Method::evolve: EvolveOptions::resolve(cfg.options, out); break;
  }
  for (const auto& w : cfg.warmstart) env.space().validate(w);
  return out;
}

inline Json resolved_config(const ProblemEnvironment& env, const OptimizerConfig& cfg, const Json& options,
                            const std::string& catalog_version) {
  Json j;
  j["task"] = env.id();
  j["environment"] = env.group();
  j["method"] = to_string(cfg.method);
  j["budget"] = cfg.budget;
  j["seed"] = cfg.seed;
  j["sense"] = to_string(env.sense());
  j["options"] = options;
  j["warmstart_count"] = cfg.warmstart.size();
  j["record_wall_time"] = cfg.record_wall_time;
  j["rng"] = kRngAlgorithm;
  j["catalog_version"] = catalog_version;
  j["harness_version"] = kHarnessVersion;
  j["task_definition"] = env.definition();
  return j;
}

/// Runs one (task, method, seed) under the budget. The environment's
/// evaluation counter is reset first and equals the trajectory length after.
inline Trajectory run_with_budget(ProblemEnvironment& env, const OptimizerConfig& cfg,
                                  const std::string& catalog_version = "unversioned", RecordSink sink = {}) {
  const Json options = resolve_options(env, cfg);
  Trajectory traj;
  traj.seed = cfg.seed;
  traj.resolved_config = resolved_config(env, cfg, options, catalog_version);
  env.reset_evaluation_count();
  BudgetedObjective obj(env, cfg.budget, traj, cfg.record_wall_time);
  obj.set_sink(std::move(sink));
  const Rng root(cfg.seed, static_cast<std::uint64_t>(cfg.method) + 1);
  try {
    std::vector<Observation> seeds;
    for (const auto& w : cfg.warmstart) {
      const double r = obj.evaluate(w);
      seeds.push_back({env.space().normalize(w), r});
    }
    switch (cfg.method) {
      case Method::lbfgsb: {
        Json scratch;
        Lbfgsb m(LbfgsbOptions::resolve(cfg.options, scratch), root.split(0), analytic_reward_gradient(env));
        m.run(obj, seeds);
        break;
      }
      case Method::pso: {
        Json scratch;
        Pso m(PsoOptions::resolve(cfg.options, scratch, cfg.budget), root.split(0));
        m.run(obj, seeds);
        break;
      }
      case Method::cmaes: {
        Json scratch;
        Cmaes m(CmaesOptions::resolve(cfg.options, scratch, env.space().relaxed_dim()), root.split(0));
        m.run(obj, seeds);
        break;
      }
      case Method::bo: {
        Json scratch;
        BayesOpt m(BoOptions::resolve(cfg.options, scratch), root.split(0));
        m.run(obj, seeds);
        break;
      }
      case Method::evolve: {
        Json scratch;
        Evolve m(EvolveOptions::resolve(cfg.options, scratch), root.split(0));
        m.run(obj, seeds);
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    // normal end of a run
  } catch (const std::exception& e) {
    traj.failure = e.what();
  }
  if (env.evaluation_count() != traj.evals.size()) {
    throw std::logic_error("evaluation count drifted from the trajectory");
  }
  return traj;
}

// ---- run directory files --------------------------------------------------

inline constexpr const char* kResultsHeader = "iter,design_id,reward,best_reward,feasible,n_evals,wall_ms";

inline std::string results_csv_row(const EvalRecord& e) {
  std::ostringstream os;
  os << e.index << ',' << e.design_id << ',' << format_double(e.reward) << ',' << format_double(e.best_so_far) << ','
     << (e.feasible ? 1 : 0) << ',' << (e.index + 1) << ',' << format_fixed(e.wall_ms, 3) << '\n';
  return os.str();
}

inline std::string results_csv(const Trajectory& t) {
  std::string out = std::string(kResultsHeader) + "\n";
  for (const auto& e : t.evals) out += results_csv_row(e);
  return out;
}

inline Json best_design_json(const ProblemEnvironment& env, const Trajectory& t) {
  Json j;
  const auto idx = t.best_index();
  if (!idx) {
    j["design_id"] = nullptr;
    j["reward"] = nullptr;
    return j;
  }
  const auto& e = t.evals[*idx];
  j["design_id"] = e.design_id;
  j["iter"] = e.index;
  j["reward"] = e.reward;
  j["feasible"] = e.feasible;
  j["design"] = env.space().design_to_json(e.design);
  return j;
}

/// Writes results.csv, resolved_config.json, best_design.json and, when
/// evaluations failed, failures.json into `dir`.
inline void write_run_directory(const std::filesystem::path& dir, const ProblemEnvironment& env, const Trajectory& t) {
  std::filesystem::create_directories(dir);
  write_text_file((dir / "results.csv").string(), results_csv(t));
  Json cfg = t.resolved_config;
  if (!t.warnings.empty()) cfg["warnings"] = t.warnings;
  if (t.failure) cfg["failure"] = *t.failure;
  write_text_file((dir / "resolved_config.json").string(), cfg.dump(2) + "\n");
  write_text_file((dir / "best_design.json").string(), best_design_json(env, t).dump(2) + "\n");
  if (t.error_count() > 0) {
    Json f = Json::array();
    for (const auto& e : t.evals) {
      if (e.error) f.push_back({{"iter", e.index}, {"design_id", e.design_id}, {"error", *e.error}});
    }
    write_text_file((dir / "failures.json").string(), f.dump(2) + "\n");
  }
}

}  // namespace shapebench

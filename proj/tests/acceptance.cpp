// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include "shapebench/cli/commands.hpp"
#include "shapebench/shapebench.hpp"

using namespace shapebench;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

const Catalog& catalog() {
  static const Catalog c = Catalog::builtin();
  return c;
}

// ---- 1 ---------------------------------------------------------------------

Outcome diagnostic_golden() {
  const auto t0 = Clock::now();
  const std::string data = std::string(SHAPEBENCH_SOURCE_DIR) + "/tests/data/";
  const Json snapshot = read_json_file(data + "car_snapshot.json");
  const Json golden = read_json_file(data + "car_evidence_golden.json");
  const ProblemEnvironment env = catalog().make("car_cd");
  BundleOptions opt;
  opt.probe = [](const std::string&) { return true; };
  const Json got = build_evidence_bundle(env, DiagnosticInputs::from_snapshot(snapshot), opt).to_json();
  const Json& eb = got.at("evidence_bundle");
  const Json& geb = golden.at("evidence_bundle");

  Outcome o;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = what;
    }
  };
  auto near = [](const Json& v, double want) { return std::abs(v.get<double>() - want) <= 1e-9; };

  const Json& g1 = eb["geometry"][0];
  expect(g1["status"] == "warning" && near(g1["severity"], 0.9) && near(g1["value"]["near_bound_fraction"], 0.8),
         "G001 fraction/severity");
  expect(g1["value"]["near_bound_keys"] == geb["geometry"][0]["value"]["near_bound_keys"] &&
             g1["value"]["near_bound_keys"].size() == 16,
         "G001 key set");
  const Json& g2 = eb["geometry"][1];
  expect(near(g2["value"]["combined_abs_angle_sum"], 47.121438172129935) && near(g2["severity"], 0.9061815033101911),
         "G002");
  const Json& g3 = eb["geometry"][2];
  expect(near(g3["value"]["coupling_score"], 2.4024288886953036) && near(g3["severity"], 0.8008096295651012),
         "G003");
  const Json& a1 = eb["aero"][0];
  expect(a1["status"] == "ok" && a1["value"]["rel_err"].get<double>() == 0.0 &&
             near(a1["value"]["drag_pressure_plus_shear"], 154.4256248474121),
         "A001");
  expect(std::abs(car_drag_coefficient(120.70740509033203, 33.71821975708008) - 0.06515849149679837) <= 1e-9, "Cd");
  const Json& s = eb["summary"];
  expect(s["feasibility"]["ok"] == 6 && s["geometry"]["warning"] == 3 && s["aero"]["ok"] == 4, "summary counts");
  for (const char* tier : {"feasibility", "geometry", "aero"}) {
    for (std::size_t i = 0; i < geb[tier].size(); ++i) {
      expect(eb[tier][i]["check_id"] == geb[tier][i]["check_id"] && eb[tier][i]["status"] == geb[tier][i]["status"] &&
                 near(eb[tier][i]["severity"], geb[tier][i]["severity"].get<double>()),
             std::string(tier) + " check " + std::to_string(i));
    }
  }
  const double secs = seconds_since(t0);
  expect(secs < 1.0, "runtime " + fmt(secs) + " s");
  if (o.pass) o.detail = "all listed values within 1e-9, " + fmt(secs * 1000.0) + " ms";
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Trajectory run(const std::string& task, Method m, std::size_t budget, std::uint64_t seed) {
  ProblemEnvironment env = catalog().make(task);
  OptimizerConfig cfg;
  cfg.method = m;
  cfg.budget = budget;
  cfg.seed = seed;
  return run_with_budget(env, cfg, catalog().version());
}

Outcome optimizer_sanity() {
  const auto t0 = Clock::now();
  Outcome o;
  std::ostringstream d;
  auto worst_objective = [&](const std::string& task, Method m) {
    double worst = 0.0;
    for (std::uint64_t s = 1; s <= 10; ++s) worst = std::max(worst, -run(task, m, 5000, s).best_reward());
    return worst;
  };
  const double cma = worst_objective("sphere_10d", Method::cmaes);
  const double pso = worst_objective("sphere_10d", Method::pso);
  const double lbfgsb = worst_objective("quadratic_10d", Method::lbfgsb);
  const double evo = worst_objective("sphere_10d", Method::evolve);
  int bo_hits = 0;
  const double x_star = 0.75724876;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const Trajectory t = run("forrester_1d", Method::bo, 60, s);
    const double x = t.evals[*t.best_index()].design.number("x");
    if (std::abs(x - x_star) <= 0.05) ++bo_hits;
  }
  const double secs = seconds_since(t0);
  o.pass = cma <= 1e-3 && pso <= 1e-3 && lbfgsb <= 1e-6 && evo <= 1e-2 && bo_hits >= 18 && secs < 120.0;
  d << "worst of 10 seeds: cmaes " << fmt(cma) << ", pso " << fmt(pso) << ", lbfgsb " << fmt(lbfgsb) << ", evolve "
    << fmt(evo) << "; bo basin " << bo_hits << "/20; " << fmt(secs) << " s";
  o.detail = d.str();
  return o;
}

// ---- 3 ---------------------------------------------------------------------

// Counts every call that reaches the underlying evaluator, across clones.
class CountingEvaluator : public Evaluator {
 public:
  CountingEvaluator(std::unique_ptr<Evaluator> inner, std::shared_ptr<std::atomic<std::size_t>> calls)
      : inner_(std::move(inner)), calls_(std::move(calls)) {}

  Metrics evaluate(const ParamSpace& space, const DesignPoint& point, const OperatingPoint& op) override {
    ++*calls_;
    return inner_->evaluate(space, point, op);
  }
  std::unique_ptr<Evaluator> clone() const override {
    return std::make_unique<CountingEvaluator>(inner_->clone(), calls_);
  }
  Json describe() const override { return inner_->describe(); }

 private:
  std::unique_ptr<Evaluator> inner_;
  std::shared_ptr<std::atomic<std::size_t>> calls_;
};

Outcome budget_protocol() {
  const std::vector<std::string> tasks{"sphere_10d", "rosenbrock_2d", "forrester_1d", "airfoil_sp",
                                       "delta_wing_mo_a", "ceras_fuel", "car_cd"};
  const std::size_t budget = 50;
  std::size_t combos = 0;
  for (const auto& task : tasks) {
    // evaluator calls per design, checked constant on a few samples
    auto calls = std::make_shared<std::atomic<std::size_t>>(0);
    ProblemEnvironment probe = catalog().make(task);
    probe.set_evaluator(std::make_unique<CountingEvaluator>(probe.evaluator().clone(), calls));
    std::size_t cost = 0;
    for (const auto& p : probe.space().sample_uniform(99, 5)) {
      const std::size_t before = *calls;
      probe.evaluate(p);
      const std::size_t c = *calls - before;
      if (cost != 0 && c != cost) return {false, task + ": evaluator calls per design vary"};
      cost = c;
    }
    for (Method m : kAllMethods) {
      ProblemEnvironment env = catalog().make(task);
      *calls = 0;
      env.set_evaluator(std::make_unique<CountingEvaluator>(env.evaluator().clone(), calls));
      OptimizerConfig cfg;
      cfg.method = m;
      cfg.budget = budget;
      cfg.seed = 11;
      cfg.warmstart = env.space().sample_uniform(5, 3);
      const Trajectory t = run_with_budget(env, cfg, catalog().version());
      const std::string id = task + "/" + to_string(m);
      if (t.failure) return {false, id + ": run failed: " + *t.failure};
      if (t.size() > budget) return {false, id + ": " + std::to_string(t.size()) + " > budget"};
      if (env.evaluation_count() != t.size()) return {false, id + ": charged count differs from trajectory"};
      if (*calls != cost * t.size()) {
        return {false, id + ": " + std::to_string(*calls) + " evaluator calls for " + std::to_string(t.size()) +
                           " designs"};
      }
      for (std::size_t i = 0; i < cfg.warmstart.size(); ++i) {
        if (t.evals[i].design.values != cfg.warmstart[i].values) return {false, id + ": warm start not first"};
      }
      ++combos;
    }
  }
  return {combos == 35, std::to_string(combos) + " method x task runs, every evaluator call counted, none over budget"};
}

// ---- 4 ---------------------------------------------------------------------

Outcome schedules_and_formulas() {
  Outcome o;
  const double T = 199.0;
  const auto a = pso_coefficients(0, T), m = pso_coefficients(T / 2, T), b = pso_coefficients(T, T);
  const bool pso = a.w == 0.8 && a.c1 == 1.5 && a.c2 == 0.2 && m.w == 0.5 && m.c1 == 1.0 && m.c2 == 1.6 &&
                   b.w == 0.2 && b.c1 == 0.5 && b.c2 == 3.0;
  const bool re = reynolds_schedule(1.25) == 500000.0 &&
                  std::abs(reynolds_schedule(0.8) - 625000.0) <= 1e-6 * 625000.0;
  const bool pen = penalized_reward(300.0, {{"v", 1.0}}, 500.0) == -200.0;
  o.pass = pso && re && pen;
  o.detail = std::string("pso schedule ") + (pso ? "exact" : "WRONG") + ", reynolds " + (re ? "ok" : "WRONG") +
             ", penalty " + (pen ? "ok" : "WRONG");
  return o;
}

// ---- 5 ---------------------------------------------------------------------

Outcome bisection() {
  const std::vector<double> targets{0.185, 0.206, 0.206, 0.206, 0.227};
  const double bound = 17.0 / 256.0;
  double worst = 0.0;
  // a few lift slopes and offsets; every target stays inside the bracket
  for (double slope : {0.03, 0.0573, 0.11}) {
    for (double cl0 : {0.1, 0.2}) {
      auto cl = [&](double alpha) { return cl0 + slope * alpha; };
      for (double t : targets) {
        const double alpha_star = (t - cl0) / slope;
        if (alpha_star < -5.0 || alpha_star > 12.0) continue;
        const auto r = bisect_alpha_to_cl(cl, t, -5.0, 12.0, 8);
        if (!r.bracketed) return {false, "target " + fmt(t) + " not bracketed"};
        worst = std::max(worst, std::abs(r.alpha - alpha_star));
      }
    }
  }
  return {worst <= bound, "max |alpha - alpha*| = " + fmt(worst, 4) + " deg (bound " + fmt(bound, 4) + ")"};
}

// ---- 6 ---------------------------------------------------------------------

std::vector<std::size_t> brute_front(const std::vector<std::vector<double>>& pts, const std::vector<Sense>& senses) {
  auto dominates = [&](const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t k = 0; k < senses.size(); ++k) {
      const double x = senses[k] == Sense::maximize ? a[k] : -a[k];
      const double y = senses[k] == Sense::maximize ? b[k] : -b[k];
      if (x < y) return false;
      if (x > y) strict = true;
    }
    return strict;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) dominated = j != i && dominates(pts[j], pts[i]);
    if (!dominated) out.push_back(i);
  }
  return out;
}

Outcome analytics_oracles() {
  const bool rho = std::abs(*spearman_rho({1, 2, 3, 4}, {1, 2, 3, 4}) - 1.0) <= 1e-12 &&
                   std::abs(*spearman_rho({1, 2, 3, 4}, {4, 3, 2, 1}) + 1.0) <= 1e-12 &&
                   std::abs(*spearman_rho({1, 2, 3, 4}, {1, 3, 2, 4}) - 0.8) <= 1e-12;
  if (!rho) return {false, "spearman examples"};

  Rng rng(77, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    std::map<std::string, double> v, w;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = std::round(rng.normal() * 4.0) / 4.0;
      v["m" + std::to_string(i)] = x;
      w["m" + std::to_string(i)] = std::exp(3.0 * x) + 1.0;
    }
    if (normalized_rank(v, Sense::minimize) != normalized_rank(w, Sense::minimize)) {
      return {false, "normalized rank changed under a monotone transform"};
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(200);
    std::vector<Sense> senses(2 + rng.below(3));
    for (auto& s : senses) s = rng.below(2) ? Sense::maximize : Sense::minimize;
    std::vector<std::vector<double>> pts(n, std::vector<double>(senses.size()));
    for (auto& p : pts) {
      for (auto& x : p) x = trial % 2 ? rng.normal() : static_cast<double>(rng.below(6));
    }
    if (pareto_front(pts, senses) != brute_front(pts, senses)) return {false, "pareto front mismatch"};
  }
  return {true, "spearman examples exact, 1000 rank-invariance and 1000 pareto instances agree"};
}

// ---- 7 ---------------------------------------------------------------------

Outcome gradient_check() {
  double worst = 0.0;
  std::size_t tasks = 0;
  for (const auto& id : catalog().ids()) {
    const ProblemEnvironment env = catalog().make(id);
    const auto* land = dynamic_cast<const StandInLandscape*>(&env.evaluator());
    if (!land) continue;
    ++tasks;
    OperatingPoint op = env.points().front();
    if (!op.alpha) op.alpha = 2.0;
    Rng rng(404, tasks);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> u(land->dim());
      for (auto& x : u) x = rng.uniform(0.02, 0.98);
      for (std::size_t k = 0; k < land->field_specs().size(); ++k) {
        std::vector<double> g(u.size());
        land->metric_gradient(k, u, op, g);
        const std::string name = land->field_specs()[k].name;
        const auto fd = fd_gradient([&](std::span<const double> x) { return land->metrics_at(x, op).at(name); }, u,
                                    1e-5);
        for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(g[i] - fd[i]));
      }
    }
  }
  return {worst <= 1e-5 && tasks > 0,
          std::to_string(tasks) + " stand-in tasks x 100 points, max abs error " + fmt(worst)};
}

// ---- 8 ---------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome reproducibility() {
  const fs::path root = fs::temp_directory_path() / "shapebench_acceptance_repro";
  fs::remove_all(root);
  RunArgs args;
  args.tasks = {"airfoil_sp", "ceras_fuel"};
  for (Method m : kAllMethods) args.methods.push_back(to_string(m));
  args.seeds = {7};
  args.budget = 80;
  std::ostringstream sink;
  std::size_t compared = 0;
  for (const char* pass : {"first", "second"}) {
    args.out = (root / pass).string();
    if (cmd_run(args, sink, sink) != 0) return {false, std::string("cmd_run failed on the ") + pass + " pass"};
  }
  for (const auto& task : args.tasks) {
    for (const auto& m : args.methods) {
      const fs::path rel = fs::path(task) / m / "seed7" / "results.csv";
      const std::string a = slurp(root / "first" / rel), b = slurp(root / "second" / rel);
      if (a.empty() || a != b) return {false, rel.string() + " differs"};
      ++compared;
    }
  }
  fs::remove_all(root);
  return {true, std::to_string(compared) + " results.csv pairs byte-identical (5 methods x 2 tasks)"};
}

// ---- 9 ---------------------------------------------------------------------

Outcome subprocess_protocol() {
  const ParamSpace space({VariableSpec::continuous("a", -1, 1), VariableSpec::continuous("b", -1, 1),
                          VariableSpec::continuous("c", -1, 1)});
  SubprocessEvaluator ev(SHAPEBENCH_ECHO_EVALUATOR, 10.0);
  Rng rng(9, 0);
  std::size_t errors = 0;
  for (int i = 0; i < 1000; ++i) {
    DesignPoint p;
    double f = 0.0;
    for (const char* k : {"a", "b", "c"}) {
      const double x = rng.uniform(-1, 1);
      p.values[k] = x;
      f += x * x;
    }
    try {
      const Metrics m = ev.evaluate(space, p, OperatingPoint{});
      if (m.at("a") != p.number("a") || m.at("b") != p.number("b") || m.at("c") != p.number("c") ||
          std::abs(m.at("f") - f) > 1e-12) {
        ++errors;
      }
    } catch (const std::exception&) {
      ++errors;
    }
  }
  if (errors) return {false, std::to_string(errors) + " protocol errors in 1000 round trips"};

  ProblemEnvironment env = catalog().make(
      "sphere_10d", std::make_unique<SubprocessEvaluator>(std::string(SHAPEBENCH_ECHO_EVALUATOR) + " --crash-after 4"));
  OptimizerConfig cfg;
  cfg.method = Method::cmaes;
  cfg.budget = 12;
  Trajectory t;
  try {
    t = run_with_budget(env, cfg, catalog().version());
  } catch (const std::exception& e) {
    return {false, std::string("crashing evaluator escaped as an exception: ") + e.what()};
  }
  const std::size_t errs = t.error_count();
  if (errs == 0) return {false, "crash produced no evaluation-error entry"};
  if (t.size() > cfg.budget) return {false, "crash run exceeded its budget"};
  return {true, "1000 round trips, 0 errors; crash run recorded " + std::to_string(errs) +
                    " evaluation error(s) in " + std::to_string(t.size()) + " entries"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"diagnostic golden reproduction", diagnostic_golden},
      {"optimizer sanity", optimizer_sanity},
      {"budget protocol", budget_protocol},
      {"schedules and formulas", schedules_and_formulas},
      {"bisection", bisection},
      {"analytics oracles", analytics_oracles},
      {"gradient check", gradient_check},
      {"reproducibility", reproducibility},
      {"subprocess protocol", subprocess_protocol},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}

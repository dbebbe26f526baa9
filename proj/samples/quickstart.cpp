// Runs CMA-ES on the built-in sphere task, ranks two methods, then diagnoses
// a mid-range car design.

#include <iostream>

#include "shapebench/shapebench.hpp"

int main() {
  using namespace shapebench;
  const Catalog catalog = Catalog::load();

  ProblemEnvironment env = catalog.make("sphere_10d");
  OptimizerConfig cfg;
  cfg.method = Method::cmaes;
  cfg.budget = 1000;
  cfg.seed = 7;
  const Trajectory traj = run_with_budget(env, cfg, catalog.version());
  std::cout << "cmaes on sphere_10d: " << traj.size() << " evaluations, best reward "
            << format_fixed(traj.best_reward(), 6) << "\n";

  // Same task through the analytics layer: rank two methods at two budgets.
  std::vector<RunRecord> runs;
  for (Method m : {Method::cmaes, Method::pso}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      ProblemEnvironment e = catalog.make("sphere_10d");
      OptimizerConfig c;
      c.method = m;
      c.budget = 300;
      c.seed = seed;
      RunRecord r{"sphere_10d", e.group(), to_string(m), seed, c.budget, {}, {}};
      for (const auto& rec : run_with_budget(e, c).evals) r.rewards.push_back(rec.reward);
      runs.push_back(std::move(r));
    }
  }
  CompareOptions opt;
  opt.budget_grid = {0.5, 1.0};
  const CompareReport rep = compare_runs(RunSet(std::move(runs)), opt);
  std::cout << rank_table_csv(rep);

  ProblemEnvironment car = catalog.make("car_cd");
  DiagnosticInputs in;
  in.design_id = "quickstart";
  in.design_path = "designs/vtk_E_quickstart.vtk";
  for (const auto& v : car.space().variables()) in.design_params[v.name] = 0.5 * (v.lower + v.upper);
  in.metrics = {{"drag", 120.7}, {"lift", 31.0}, {"drag_pressure", 101.5}, {"drag_shear", 19.2}};
  const EvidenceBundle bundle = build_evidence_bundle(car, in);
  std::cout << "car_cd diagnostics: " << to_string(bundle.worst_status()) << "\n"
            << bundle.to_json()["evidence_bundle"]["summary"].dump(2) << "\n";
}

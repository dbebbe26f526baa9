// shapebench: list tasks, run optimizers, compare runs, diagnose designs.

#include <CLI11.hpp>
#include <iostream>

#include "shapebench/cli/commands.hpp"

namespace {

// "1,2,5-8" -> 1 2 5 6 7 8
std::vector<std::uint64_t> parse_seeds(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const auto& s : items) {
    const auto dash = s.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoull(s));
      } else {
        const auto lo = std::stoull(s.substr(0, dash));
        const auto hi = std::stoull(s.substr(dash + 1));
        if (hi < lo) throw shapebench::ConfigError("empty seed range '" + s + "'");
        for (auto k = lo; k <= hi; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw shapebench::ConfigError("bad seed '" + s + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shapebench: budget-matched optimizer benchmarks for aerodynamic shape tasks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", shapebench::kHarnessVersion);

  shapebench::ListArgs list_args;
  auto* list = app.add_subcommand("list", "List catalog tasks");
  list->add_option("--filter,--kind", list_args.filters, "key=value filter (id, environment, kind, sense, objectives)");
  list->add_flag("--json", list_args.json, "Print JSON");

  shapebench::RunArgs run_args;
  std::vector<std::string> seed_items{"42"};
  std::string options_text;
  auto* run = app.add_subcommand("run", "Run optimizers on tasks under an evaluation budget");
  run->add_option("--task", run_args.tasks, "Task id(s)")->required()->delimiter(',');
  run->add_option("--method", run_args.methods, "lbfgsb, pso, cmaes, bo, evolve")->required()->delimiter(',');
  run->add_option("--seeds,--seed", seed_items, "Seeds, e.g. 1,2,3 or 1-10")->delimiter(',');
  run->add_option("--budget", run_args.budget, "Evaluations per run")->capture_default_str();
  run->add_option("--jobs", run_args.jobs, "Concurrent runs")->capture_default_str();
  run->add_option("--warmstart", run_args.warmstart_csv, "CSV of designs evaluated first");
  run->add_option("--evaluator", run_args.evaluator, "Subprocess evaluator command");
  run->add_option("--out", run_args.out, "Output root")->capture_default_str();
  run->add_option("--options", options_text, "JSON object of method options, keyed by method");
  run->add_flag("--record-wall-time", run_args.record_wall_time, "Record wall time per evaluation");

  shapebench::CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "Rank methods across runs");
  cmp->add_option("roots", cmp_args.roots, "Run roots")->required();
  cmp->add_option("--group-by", cmp_args.group_by, "task or environment")->capture_default_str();
  cmp->add_option("--out", cmp_args.out, "Report directory")->capture_default_str();
  cmp->add_flag("--svg", cmp_args.svg, "Also write an SVG rank plot");

  shapebench::DiagnoseArgs diag_args;
  auto* diag = app.add_subcommand("diagnose", "Deterministic diagnostics for one design");
  diag->add_option("--design", diag_args.design, "Design JSON or input snapshot")->required();
  diag->add_option("--metrics", diag_args.metrics, "Metrics JSON");
  diag->add_option("--task", diag_args.task, "Catalog task id")->required();
  diag->add_option("--out", diag_args.out, "Bundle output path (default stdout)");
  diag->add_option("--image", diag_args.images, "Flow image path(s)");
  diag->add_flag("--trust-paths", diag_args.trust_paths, "Treat listed artifact and image paths as present");

  std::string export_out;
  bool export_header = false;
  auto* catalog = app.add_subcommand("catalog", "Catalog utilities");
  catalog->require_subcommand(1);
  auto* exp = catalog->add_subcommand("export", "Write the active catalog");
  exp->add_option("--out", export_out, "Output path (default stdout)");
  exp->add_flag("--header", export_header, "Emit the embedded-catalog C++ header instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return shapebench::cmd_list(list_args, std::cout);
    if (*run) {
      run_args.seeds = parse_seeds(seed_items);
      if (!options_text.empty()) {
        try {
          run_args.options = shapebench::Json::parse(options_text);
        } catch (const shapebench::Json::exception& e) {
          throw shapebench::ConfigError(std::string("--options is not valid JSON: ") + e.what());
        }
      }
      return shapebench::cmd_run(run_args, std::cout, std::cerr);
    }
    if (*cmp) return shapebench::cmd_compare(cmp_args, std::cout, std::cerr);
    if (*diag) return shapebench::cmd_diagnose(diag_args, std::cout, std::cerr);
    if (*exp) return shapebench::cmd_catalog_export(export_out, export_header, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

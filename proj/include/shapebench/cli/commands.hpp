#pragma once

// Command implementations behind the `shapebench` executable. Each returns
// the process exit code; argument parsing lives in tools/shapebench.cpp.

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "shapebench/analytics/report.hpp"
#include "shapebench/diagnostics/bundle.hpp"
#include "shapebench/optimizers/runner.hpp"
#include "shapebench/problems/catalog.hpp"
#include "shapebench/problems/subprocess.hpp"

namespace shapebench {

// ---- list -----------------------------------------------------------------

struct ListArgs {
  std::vector<std::string> filters;  // key=value
  bool json = false;
};

inline Json task_summary(const ProblemEnvironment& env) {
  const auto& s = env.space();
  Json j;
  j["id"] = env.id();
  j["environment"] = env.group();
  j["category"] = env.category();
  j["dimension"] = s.size();
  j["relaxed_dimension"] = s.relaxed_dim();
  j["continuous"] = s.count(VariableKind::continuous);
  j["discrete"] = s.count(VariableKind::discrete);
  j["categorical"] = s.count(VariableKind::categorical);
  j["operating_points"] = env.points().size();
  j["objectives"] = env.objectives().size();
  j["sense"] = env.multi_objective() ? "multi" : to_string(env.sense());
  j["constraints"] = env.constraints().size();
  j["description"] = env.description();
  return j;
}

/// Filter keys: id, environment, kind (= category), sense, objectives.
inline bool task_matches(const Json& summary, const std::string& key, const std::string& value) {
  if (key == "id") return summary.at("id") == value;
  if (key == "environment") return summary.at("environment") == value;
  if (key == "kind" || key == "category") return summary.at("category") == value;
  if (key == "sense") return summary.at("sense") == value;
  if (key == "objectives") return std::to_string(summary.at("objectives").get<std::size_t>()) == value;
  throw ConfigError("unknown filter key '" + key + "' (expected id, environment, kind, category, sense, objectives)");
}

inline int cmd_list(const ListArgs& args, std::ostream& out) {
  const Catalog cat = Catalog::load();
  std::vector<std::pair<std::string, std::string>> filters;
  for (const auto& f : args.filters) {
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("filter must look like key=value: '" + f + "'");
    filters.emplace_back(f.substr(0, eq), f.substr(eq + 1));
  }
  Json rows = Json::array();
  for (const auto& id : cat.ids()) {
    const Json s = task_summary(cat.make(id));
    bool keep = true;
    for (const auto& [k, v] : filters) keep = task_matches(s, k, v) && keep;
    if (keep) rows.push_back(s);
  }
  if (args.json) {
    Json doc;
    doc["catalog_version"] = cat.version();
    doc["tasks"] = rows;
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << std::left << std::setw(24) << "id" << std::setw(11) << "category" << std::right << std::setw(5) << "dim"
      << std::setw(9) << "c/d/k" << std::setw(5) << "ops" << std::setw(10) << "sense" << std::setw(6) << "cons"
      << "\n";
  for (const auto& r : rows) {
    const std::string kinds = std::to_string(r.at("continuous").get<std::size_t>()) + "/" +
                              std::to_string(r.at("discrete").get<std::size_t>()) + "/" +
                              std::to_string(r.at("categorical").get<std::size_t>());
    out << std::left << std::setw(24) << r.at("id").get<std::string>() << std::setw(11)
        << r.at("category").get<std::string>() << std::right << std::setw(5) << r.at("dimension").get<std::size_t>()
        << std::setw(9) << kinds << std::setw(5) << r.at("operating_points").get<std::size_t>() << std::setw(10)
        << r.at("sense").get<std::string>() << std::setw(6) << r.at("constraints").get<std::size_t>() << "\n";
  }
  out << rows.size() << " task(s), catalog " << cat.version() << "\n";
  return 0;
}

// ---- run ------------------------------------------------------------------

struct RunArgs {
  std::vector<std::string> tasks;
  std::vector<std::string> methods;
  std::vector<std::uint64_t> seeds = {42};
  std::size_t budget = 3000;
  std::size_t jobs = 1;
  std::string warmstart_csv;
  std::string evaluator;  // subprocess command; empty keeps the catalog evaluator
  std::string out = "results";
  Json options = Json::object();  // method -> options object
  bool record_wall_time = false;
};

/// Warm-start designs from a CSV whose header names the variables; a `name`
/// column is optional.
inline std::vector<DesignPoint> read_warmstart_csv(const std::string& path, const ParamSpace& space) {
  const std::string text = read_text_file(path);
  std::istringstream ss(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      f.push_back(cell);
    }
    return f;
  };
  if (!std::getline(ss, line)) throw ConfigError(path + ": empty warm-start file");
  const auto header = split(line);
  std::vector<DesignPoint> out;
  std::size_t row = 1;
  while (std::getline(ss, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw ConfigError(path + ":" + std::to_string(row) + ": wrong number of cells");
    DesignPoint p;
    p.name = "warmstart_" + std::to_string(out.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == "name") {
        p.name = cells[i];
        continue;
      }
      const auto idx = space.index_of(header[i]);
      if (!idx) throw ConfigError(path + ": unknown variable '" + header[i] + "'");
      if (space.variables()[*idx].kind == VariableKind::categorical) {
        p.values[header[i]] = cells[i];
      } else {
        try {
          p.values[header[i]] = parse_double(cells[i]);
        } catch (const std::invalid_argument&) {
          throw ConfigError(path + ":" + std::to_string(row) + ": '" + cells[i] + "' is not a number");
        }
      }
    }
    try {
      space.validate(p);
    } catch (const SpaceError& e) {
      throw ConfigError(path + ":" + std::to_string(row) + ": " + e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunJob {
  std::string task;
  Method method;
  std::uint64_t seed;
};

inline std::filesystem::path run_directory(const std::filesystem::path& root, const RunJob& j) {
  return root / j.task / to_string(j.method) / ("seed" + std::to_string(j.seed));
}

/// Runs the task x method x seed grid. Everything is validated before the
/// manifest is written; the manifest is written before the first evaluation.
inline int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  if (args.tasks.empty() || args.methods.empty() || args.seeds.empty()) {
    throw ConfigError("run needs at least one task, method and seed");
  }
  if (args.jobs < 1) throw ConfigError("--jobs must be >= 1");
  if (!args.options.is_object()) throw ConfigError("--options must be a JSON object keyed by method");
  const Catalog cat = Catalog::load();
  std::vector<Method> methods;
  for (const auto& m : args.methods) methods.push_back(parse_method(m));
  for (const auto& [k, v] : args.options.items()) {
    parse_method(k);
    if (!v.is_object()) throw ConfigError("--options." + k + " must be an object");
  }
  auto evaluator_for = [&]() -> std::unique_ptr<Evaluator> {
    if (args.evaluator.empty()) return nullptr;
    return std::make_unique<SubprocessEvaluator>(args.evaluator);
  };

  std::map<std::string, std::vector<DesignPoint>> warm;
  std::map<std::string, ProblemEnvironment> prototypes;
  for (const auto& t : args.tasks) {
    ProblemEnvironment env = cat.make(t, evaluator_for());
    if (!args.warmstart_csv.empty()) warm[t] = read_warmstart_csv(args.warmstart_csv, env.space());
    for (Method m : methods) {
      OptimizerConfig cfg;
      cfg.method = m;
      cfg.budget = args.budget;
      cfg.options = args.options.value(to_string(m), Json::object());
      cfg.warmstart = warm[t];
      try {
        resolve_options(env, cfg);
      } catch (const std::exception& e) {
        throw ConfigError(t + "/" + to_string(m) + ": " + e.what());
      }
    }
    prototypes.emplace(t, std::move(env));
  }

  const std::filesystem::path root(args.out);
  std::filesystem::create_directories(root);
  Json manifest;
  manifest["tasks"] = args.tasks;
  manifest["methods"] = args.methods;
  manifest["seeds"] = args.seeds;
  manifest["budget"] = args.budget;
  manifest["output_root"] = root.string();
  manifest["catalog_version"] = cat.version();
  manifest["harness_version"] = kHarnessVersion;
  manifest["timestamp"] = utc_timestamp();
  manifest["jobs"] = args.jobs;
  manifest["options"] = args.options;
  manifest["evaluator"] = args.evaluator.empty() ? Json(nullptr) : Json(args.evaluator);
  manifest["warmstart_csv"] = args.warmstart_csv.empty() ? Json(nullptr) : Json(args.warmstart_csv);
  write_text_file((root / "manifest.json").string(), manifest.dump(2) + "\n");

  std::vector<RunJob> jobs;
  for (const auto& t : args.tasks) {
    for (Method m : methods) {
      for (auto s : args.seeds) jobs.push_back({t, m, s});
    }
  }
  std::mutex log_mu;
  std::ofstream progress(root / "progress.log", std::ios::app);
  std::atomic<std::size_t> next{0};
  std::atomic<int> failures{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const RunJob& job = jobs[i];
      const std::string run_id = job.task + "/" + to_string(job.method) + "/seed" + std::to_string(job.seed);
      const auto dir = run_directory(root, job);
      try {
        ProblemEnvironment env = prototypes.at(job.task);  // private copy with a fresh evaluator
        OptimizerConfig cfg;
        cfg.method = job.method;
        cfg.budget = args.budget;
        cfg.seed = job.seed;
        cfg.options = args.options.value(to_string(job.method), Json::object());
        cfg.warmstart = warm.count(job.task) ? warm.at(job.task) : std::vector<DesignPoint>{};
        cfg.record_wall_time = args.record_wall_time;
        std::filesystem::create_directories(dir);
        write_text_file((dir / "resolved_config.json").string(),
                        resolved_config(env, cfg, resolve_options(env, cfg), cat.version()).dump(2) + "\n");
        std::ofstream csv(dir / "results.csv", std::ios::binary | std::ios::trunc);
        csv << kResultsHeader << "\n" << std::flush;
        Trajectory traj = run_with_budget(env, cfg, cat.version(), [&csv](const EvalRecord& e) {
          csv << results_csv_row(e) << std::flush;
        });
        csv.close();
        write_run_directory(dir, env, traj);
        std::lock_guard<std::mutex> lock(log_mu);
        progress << run_id << " evals=" << traj.size() << " best=" << format_double(traj.best_reward())
                 << " errors=" << traj.error_count() << (traj.failure ? " FAILED" : "") << "\n"
                 << std::flush;
        if (traj.error_count() > 0) {
          err << "run " << run_id << ": " << traj.error_count() << " evaluation error(s); first: "
              << *std::find_if(traj.evals.begin(), traj.evals.end(), [](const auto& e) { return e.error.has_value(); })->error
              << "\n";
        }
        if (traj.failure) {
          ++failures;
          err << "run " << run_id << " failed: " << *traj.failure << "\n";
        }
      } catch (const std::exception& e) {
        ++failures;
        std::lock_guard<std::mutex> lock(log_mu);
        progress << run_id << " FAILED " << e.what() << "\n" << std::flush;
        err << "run " << run_id << " failed: " << e.what() << "\n";
      }
    }
  };
  const std::size_t n_threads = std::min(args.jobs, jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  out << jobs.size() << " run(s) written under " << root.string() << "\n";
  return failures.load() > 0 ? 1 : 0;
}

// ---- compare --------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> roots;
  std::string group_by = "task";
  std::string out = "compare";
  bool svg = false;
};

inline int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  if (args.roots.empty()) throw ConfigError("compare needs at least one run root");
  std::vector<std::filesystem::path> roots(args.roots.begin(), args.roots.end());
  CompareOptions opt;
  opt.grouping = parse_grouping(args.group_by);
  opt.svg = args.svg;
  const CompareReport rep = compare_runs(RunSet::load(roots), opt);
  write_report(rep, args.out);
  for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
  out << rank_table_csv(rep);
  if (rep.mean_rho) out << "mean pairwise Spearman rho: " << format_fixed(rep.mean_rho->mean, 4) << "\n";
  return 0;
}

// ---- diagnose -------------------------------------------------------------

struct DiagnoseArgs {
  std::string design;    // flat parameter object, or a full input snapshot
  std::string metrics;   // flat metrics object (optional with a snapshot)
  std::string task;
  std::string out;       // empty: stdout
  std::vector<std::string> images;
  bool trust_paths = false;  // treat listed artifact and image paths as present
};

inline int cmd_diagnose(const DiagnoseArgs& args, std::ostream& out, std::ostream& err) {
  const Catalog cat = Catalog::load();
  const ProblemEnvironment env = cat.make(args.task);
  Json design;
  try {
    design = read_json_file(args.design);
  } catch (const std::exception& e) {
    throw ConfigError("cannot read design file: " + std::string(e.what()));
  }
  if (!design.is_object()) throw ConfigError("design file must hold a JSON object");
  DiagnosticInputs in;
  if (design.contains("design_params")) {
    in = DiagnosticInputs::from_snapshot(design);
  } else {
    in.design_params = design;
    in.design_path = args.design;
    if (design.contains("name") && design.at("name").is_string()) in.design_id = design.at("name").get<std::string>();
  }
  if (!args.metrics.empty()) {
    Json m;
    try {
      m = read_json_file(args.metrics);
    } catch (const std::exception& e) {
      throw ConfigError("cannot read metrics file: " + std::string(e.what()));
    }
    if (m.is_object() && m.contains("metrics")) m = m.at("metrics");
    if (!m.is_object()) throw ConfigError("metrics file must hold a JSON object");
    in.metrics = m;
    if (!in.snapshot.is_null()) in.snapshot["metrics"] = m;
  }
  for (const auto& i : args.images) in.images.push_back(i);
  if (in.design_id.empty()) in.design_id = "design";
  BundleOptions opt;
  if (args.trust_paths) opt.probe = [](const std::string&) { return true; };
  opt.provenance = {{"task", env.id()}, {"catalog_version", cat.version()}, {"harness_version", kHarnessVersion}};
  const EvidenceBundle b = build_evidence_bundle(env, in, opt);
  const std::string text = b.to_json().dump(2) + "\n";
  if (args.out.empty()) {
    out << text;
  } else {
    write_text_file(args.out, text);
  }
  const CheckStatus worst = b.worst_status();
  err << "worst status: " << to_string(worst) << "\n";
  return diagnose_exit_code(worst);
}

// ---- catalog --------------------------------------------------------------

inline int cmd_catalog_export(const std::string& out_path, bool header, std::ostream& out) {
  const Catalog cat = Catalog::load();
  const std::string text = cat.document().dump(1) + "\n";
  const std::string payload = header ? catalog_header_text(text) : text;
  if (out_path.empty()) {
    out << payload;
  } else {
    write_text_file(out_path, payload);
  }
  return 0;
}

}  // namespace shapebench

#pragma once

// Loads run directories (results.csv + resolved_config.json) into memory.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/format.hpp"
#include "shapebench/json.hpp"

namespace shapebench {

struct RunRecord {
  std::string task;
  std::string environment;
  std::string method;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::vector<double> rewards;  // per evaluation, larger is better
  std::filesystem::path dir;
};

/// Rewards column of a results.csv. A trailing partial line (interrupted
/// run) is dropped.
inline std::vector<double> read_results_rewards(const std::filesystem::path& csv) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + csv.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream ss(content);
  std::string line;
  if (!std::getline(ss, line)) throw ConfigError(csv.string() + ": empty file");
  if (line.rfind("iter,design_id,reward,", 0) != 0) throw ConfigError(csv.string() + ": unexpected header");
  const bool complete_tail = !content.empty() && content.back() == '\n';
  std::vector<std::string> lines;
  while (std::getline(ss, line)) lines.push_back(line);
  if (!complete_tail && !lines.empty()) lines.pop_back();
  std::vector<double> rewards;
  for (const auto& l : lines) {
    if (l.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() < 3) throw ConfigError(csv.string() + ": malformed row '" + l + "'");
    try {
      rewards.push_back(parse_double(f[2]));
    } catch (const std::invalid_argument&) {
      throw ConfigError(csv.string() + ": bad reward '" + f[2] + "'");
    }
  }
  return rewards;
}

inline RunRecord load_run(const std::filesystem::path& dir) {
  const Json cfg = read_json_file((dir / "resolved_config.json").string());
  RunRecord r;
  try {
    r.task = cfg.at("task").get<std::string>();
    r.environment = cfg.value("environment", r.task);
    r.method = cfg.at("method").get<std::string>();
    r.seed = cfg.at("seed").get<std::uint64_t>();
    r.budget = cfg.at("budget").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ConfigError((dir / "resolved_config.json").string() + ": " + e.what());
  }
  r.rewards = read_results_rewards(dir / "results.csv");
  r.dir = dir;
  return r;
}

class RunSet {
 public:
  RunSet() = default;
  explicit RunSet(std::vector<RunRecord> runs) : runs_(std::move(runs)) { validate(); }

  /// Every directory under the roots holding both run files. Runs with no
  /// evaluations yet are skipped.
  static RunSet load(const std::vector<std::filesystem::path>& roots) {
    std::vector<std::filesystem::path> dirs;
    for (const auto& root : roots) {
      if (!std::filesystem::exists(root)) throw ConfigError("no such run root: " + root.string());
      if (std::filesystem::exists(root / "resolved_config.json")) dirs.push_back(root);
      for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
        if (e.is_directory() && std::filesystem::exists(e.path() / "resolved_config.json") &&
            std::filesystem::exists(e.path() / "results.csv")) {
          dirs.push_back(e.path());
        }
      }
    }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    std::vector<RunRecord> runs;
    for (const auto& d : dirs) {
      if (!std::filesystem::exists(d / "results.csv")) continue;
      RunRecord r = load_run(d);
      if (!r.rewards.empty()) runs.push_back(std::move(r));
    }
    return RunSet(std::move(runs));
  }

  const std::vector<RunRecord>& runs() const { return runs_; }

  std::vector<std::string> tasks() const { return distinct(&RunRecord::task); }
  std::vector<std::string> methods() const { return distinct(&RunRecord::method); }

  std::string environment_of(const std::string& task) const {
    for (const auto& r : runs_) {
      if (r.task == task) return r.environment;
    }
    throw ContractError("unknown task " + task);
  }

  std::vector<const RunRecord*> select(const std::string& task, const std::string& method) const {
    std::vector<const RunRecord*> out;
    for (const auto& r : runs_) {
      if (r.task == task && r.method == method) out.push_back(&r);
    }
    return out;
  }

  std::size_t budget_of(const std::string& task) const {
    for (const auto& r : runs_) {
      if (r.task == task) return r.budget;
    }
    throw ContractError("unknown task " + task);
  }

 private:
  void validate() const {
    std::map<std::string, std::size_t> budgets;
    std::set<std::tuple<std::string, std::string, std::uint64_t>> seen;
    for (const auto& r : runs_) {
      auto [it, fresh] = budgets.emplace(r.task, r.budget);
      if (!fresh && it->second != r.budget) {
        throw ConfigError("task " + r.task + " mixes budgets " + std::to_string(it->second) + " and " +
                          std::to_string(r.budget));
      }
      if (!seen.emplace(r.task, r.method, r.seed).second) {
        throw ConfigError("duplicate run for " + r.task + "/" + r.method + "/seed" + std::to_string(r.seed));
      }
    }
  }

  std::vector<std::string> distinct(std::string RunRecord::*field) const {
    std::set<std::string> s;
    for (const auto& r : runs_) s.insert(r.*field);
    return {s.begin(), s.end()};
  }

  std::vector<RunRecord> runs_;
};

}  // namespace shapebench

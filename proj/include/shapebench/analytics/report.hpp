#pragma once

// Comparison report over a RunSet: per-unit normalized ranks at budget
// fractions, rank table (median and IQR across units), pairwise Spearman
// matrix, convergence and rank-trajectory plot data, optional SVG.
//
// A unit is a task, or an environment (task group). A task's value for a
// method is the median over seeds of best_so_far_at. An environment ranks
// methods by their mean task-level normalized rank. Methods without runs on
// a unit (DNC) rank last there and are flagged; they are left out of that
// unit's correlations.

#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shapebench/analytics/runset.hpp"
#include "shapebench/analytics/statistics.hpp"
#include "shapebench/format.hpp"
#include "shapebench/json.hpp"

namespace shapebench {

enum class Grouping { task, environment };

inline Grouping parse_grouping(const std::string& s) {
  if (s == "task") return Grouping::task;
  if (s == "environment") return Grouping::environment;
  throw ConfigError("unknown grouping '" + s + "' (expected task or environment)");
}

inline const char* to_string(Grouping g) { return g == Grouping::task ? "task" : "environment"; }

struct CompareOptions {
  Grouping grouping = Grouping::task;
  std::vector<double> budget_grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  std::size_t plot_points = 20;
  bool svg = false;
};

struct UnitRanks {
  std::string unit;
  // [fraction index] -> method -> normalized rank (all methods present)
  std::vector<std::map<std::string, double>> ranks;
  std::set<std::string> dnc;  // methods with no runs on this unit
};

struct CompareReport {
  CompareOptions options;
  std::vector<std::string> methods;
  std::vector<std::string> units;
  std::vector<double> fractions;         // budget_grid followed by the plot grid
  std::vector<UnitRanks> unit_ranks;     // over `fractions`
  std::vector<std::string> warnings;
  std::vector<std::vector<std::optional<double>>> rho;  // unit x unit, at fraction 1
  std::optional<PairwiseSpearman> mean_rho;
  std::vector<std::vector<std::string>> convergence_rows;  // unit,method,fraction,median,q25,q75

  std::size_t fraction_index(double f) const {
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      if (std::abs(fractions[i] - f) < 1e-12) return i;
    }
    throw ContractError("fraction not in report grid");
  }

  MedianIqr rank_summary(const std::string& method, std::size_t fi) const {
    std::vector<double> v;
    for (const auto& u : unit_ranks) v.push_back(u.ranks[fi].at(method));
    return median_iqr(v);
  }

  std::size_t dnc_count(const std::string& method) const {
    std::size_t n = 0;
    for (const auto& u : unit_ranks) n += u.dnc.count(method);
    return n;
  }
};

namespace detail {

/// Ranks of methods at one fraction from values (higher is better); methods
/// absent from `values` are placed last.
inline std::map<std::string, double> rank_with_dnc(const std::map<std::string, double>& values,
                                                   const std::vector<std::string>& methods, Sense sense,
                                                   bool& degenerate) {
  std::map<std::string, double> out;
  if (values.size() >= 2) {
    out = normalized_rank(values, sense);
  } else {
    degenerate = true;
    for (const auto& [m, v] : values) out[m] = 0.5;
  }
  for (const auto& m : methods) {
    if (!out.count(m)) out[m] = 1.0;
  }
  return out;
}

inline std::string join_csv(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

}  // namespace detail

inline CompareReport compare_runs(const RunSet& rs, const CompareOptions& opt = {}) {
  if (rs.runs().empty()) throw ConfigError("compare: no runs found");
  if (opt.plot_points < 1) throw ConfigError("compare: plot_points must be >= 1");
  for (double f : opt.budget_grid) {
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("compare: budget fractions must lie in (0, 1]");
  }
  CompareReport rep;
  rep.options = opt;
  rep.methods = rs.methods();
  rep.fractions = opt.budget_grid;
  for (std::size_t k = 1; k <= opt.plot_points; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(opt.plot_points);
    bool dup = false;
    for (double g : rep.fractions) dup = dup || std::abs(g - f) < 1e-12;
    if (!dup) rep.fractions.push_back(f);
  }
  if (rep.methods.size() < 2) rep.warnings.push_back("only one method; every normalized rank is 0.5");
  const std::size_t nf = rep.fractions.size();

  // task-level ranks
  std::map<std::string, UnitRanks> task_ranks;
  bool degenerate = false;
  for (const auto& task : rs.tasks()) {
    UnitRanks ur;
    ur.unit = task;
    ur.ranks.resize(nf);
    const std::size_t budget = rs.budget_of(task);
    std::map<std::string, std::vector<const RunRecord*>> by_method;
    for (const auto& m : rep.methods) {
      auto runs = rs.select(task, m);
      if (runs.empty()) {
        ur.dnc.insert(m);
      } else {
        by_method[m] = std::move(runs);
      }
    }
    for (std::size_t fi = 0; fi < nf; ++fi) {
      std::map<std::string, double> values;
      for (const auto& [m, runs] : by_method) {
        std::vector<double> per_seed;
        for (const auto* r : runs) per_seed.push_back(best_so_far_at(r->rewards, budget, rep.fractions[fi]));
        const auto s = median_iqr(per_seed);
        values[m] = s.median;
        if (fi >= opt.budget_grid.size()) {
          rep.convergence_rows.push_back({task, m, format_fixed(rep.fractions[fi], 4), format_double(s.median),
                                          format_double(s.q25), format_double(s.q75)});
        }
      }
      ur.ranks[fi] = detail::rank_with_dnc(values, rep.methods, Sense::maximize, degenerate);
    }
    task_ranks[task] = std::move(ur);
  }

  if (opt.grouping == Grouping::task) {
    for (auto& [t, ur] : task_ranks) rep.unit_ranks.push_back(std::move(ur));
  } else {
    std::map<std::string, std::vector<const UnitRanks*>> groups;
    for (const auto& [t, ur] : task_ranks) groups[rs.environment_of(t)].push_back(&ur);
    for (const auto& [env, members] : groups) {
      UnitRanks ur;
      ur.unit = env;
      ur.ranks.resize(nf);
      std::set<std::string> ran;
      for (const auto* m : members) {
        for (const auto& meth : rep.methods) {
          if (!m->dnc.count(meth)) ran.insert(meth);
        }
      }
      for (const auto& meth : rep.methods) {
        if (!ran.count(meth)) ur.dnc.insert(meth);
      }
      for (std::size_t fi = 0; fi < nf; ++fi) {
        std::map<std::string, double> mean_rank;
        for (const auto& meth : ran) {
          double s = 0.0;
          for (const auto* m : members) s += m->ranks[fi].at(meth);
          mean_rank[meth] = s / static_cast<double>(members.size());
        }
        ur.ranks[fi] = detail::rank_with_dnc(mean_rank, rep.methods, Sense::minimize, degenerate);
      }
      rep.unit_ranks.push_back(std::move(ur));
    }
  }
  if (degenerate && rep.methods.size() >= 2) {
    rep.warnings.push_back("some units have fewer than two methods with runs; their ranks are 0.5");
  }
  for (const auto& u : rep.unit_ranks) {
    rep.units.push_back(u.unit);
    for (const auto& m : u.dnc) rep.warnings.push_back("DNC: " + m + " has no runs on " + u.unit);
  }

  // correlations at the full budget, excluding DNC methods pairwise
  const std::size_t full = rep.fraction_index(1.0);
  const std::size_t nu = rep.unit_ranks.size();
  std::vector<std::map<std::string, double>> rankings;
  for (const auto& u : rep.unit_ranks) {
    std::map<std::string, double> r;
    for (const auto& [m, v] : u.ranks[full]) {
      if (!u.dnc.count(m)) r[m] = v;
    }
    rankings.push_back(std::move(r));
  }
  rep.rho.assign(nu, std::vector<std::optional<double>>(nu));
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nu; ++j) rep.rho[i][j] = spearman_shared(rankings[i], rankings[j]);
  }
  if (nu >= 2) {
    try {
      rep.mean_rho = mean_pairwise_spearman(rankings);
    } catch (const ContractError&) {
      rep.warnings.push_back("no unit pair shares three methods with distinct ranks; mean rho undefined");
    }
  }
  return rep;
}

// ---- writers --------------------------------------------------------------

inline std::string rank_table_csv(const CompareReport& rep) {
  std::vector<std::string> head{"method"};
  for (double f : rep.options.budget_grid) head.push_back(format_fixed(100.0 * f, 0) + "%");
  head.push_back("dnc_units");
  std::string out = detail::join_csv(head);
  for (const auto& m : rep.methods) {
    std::vector<std::string> row{m};
    for (double f : rep.options.budget_grid) {
      const auto s = rep.rank_summary(m, rep.fraction_index(f));
      row.push_back(format_fixed(s.median, 3) + "±" + format_fixed(s.iqr(), 3));
    }
    row.push_back(std::to_string(rep.dnc_count(m)));
    out += detail::join_csv(row);
  }
  return out;
}

inline std::string rank_table_long_csv(const CompareReport& rep) {
  std::string out = "method,fraction,median,q25,q75,dnc_units\n";
  for (const auto& m : rep.methods) {
    for (double f : rep.options.budget_grid) {
      const auto s = rep.rank_summary(m, rep.fraction_index(f));
      out += detail::join_csv({m, format_fixed(f, 4), format_double(s.median), format_double(s.q25),
                               format_double(s.q75), std::to_string(rep.dnc_count(m))});
    }
  }
  return out;
}

inline std::string rho_matrix_csv(const CompareReport& rep) {
  std::vector<std::string> head{""};
  for (const auto& u : rep.units) head.push_back(u);
  std::string out = detail::join_csv(head);
  for (std::size_t i = 0; i < rep.units.size(); ++i) {
    std::vector<std::string> row{rep.units[i]};
    for (std::size_t j = 0; j < rep.units.size(); ++j) {
      row.push_back(rep.rho[i][j] ? format_fixed(*rep.rho[i][j], 6) : "NA");
    }
    out += detail::join_csv(row);
  }
  return out;
}

inline std::string rank_trajectory_csv(const CompareReport& rep) {
  std::string out = "method,fraction,median,q25,q75\n";
  for (const auto& m : rep.methods) {
    for (std::size_t k = 1; k <= rep.options.plot_points; ++k) {
      const double f = static_cast<double>(k) / static_cast<double>(rep.options.plot_points);
      const auto s = rep.rank_summary(m, rep.fraction_index(f));
      out += detail::join_csv(
          {m, format_fixed(f, 4), format_double(s.median), format_double(s.q25), format_double(s.q75)});
    }
  }
  return out;
}

inline std::string convergence_csv(const CompareReport& rep) {
  std::string out = "unit,method,fraction,median,q25,q75\n";
  for (const auto& r : rep.convergence_rows) out += detail::join_csv(r);
  return out;
}

/// Median normalized rank against budget fraction, one polyline per method
/// with a shaded IQR band.
inline std::string rank_trajectory_svg(const CompareReport& rep) {
  const double W = 640, H = 400, L = 60, R = 150, T = 20, B = 50;
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  auto px = [&](double f) { return L + f * (W - L - R); };
  auto py = [&](double r) { return T + r * (H - T - B); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(1) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1)
     << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double v = k / 4.0;
    os << "<text x=\"" << px(v) << "\" y=\"" << py(1) + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
       << format_fixed(100 * v, 0) << "%</text>\n";
    os << "<text x=\"" << px(0) - 6 << "\" y=\"" << py(v) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
       << format_fixed(v, 2) << "</text>\n";
  }
  os << "<text x=\"" << px(0.5) << "\" y=\"" << H - 8 << "\" font-size=\"12\" text-anchor=\"middle\">relative budget</text>\n";
  os << "<text x=\"14\" y=\"" << py(0.5) << "\" font-size=\"12\" transform=\"rotate(-90 14 " << py(0.5)
     << ")\" text-anchor=\"middle\">normalized rank</text>\n";
  std::size_t ci = 0;
  for (const auto& m : rep.methods) {
    const char* col = palette[ci % 8];
    std::ostringstream line, band_hi, band_lo;
    std::vector<std::pair<double, double>> lo_pts;
    for (std::size_t k = 1; k <= rep.options.plot_points; ++k) {
      const double f = static_cast<double>(k) / static_cast<double>(rep.options.plot_points);
      const auto s = rep.rank_summary(m, rep.fraction_index(f));
      line << format_fixed(px(f), 1) << "," << format_fixed(py(s.median), 1) << " ";
      band_hi << format_fixed(px(f), 1) << "," << format_fixed(py(s.q75), 1) << " ";
      lo_pts.emplace_back(px(f), py(s.q25));
    }
    for (auto it = lo_pts.rbegin(); it != lo_pts.rend(); ++it) {
      band_lo << format_fixed(it->first, 1) << "," << format_fixed(it->second, 1) << " ";
    }
    os << "<polygon points=\"" << band_hi.str() << band_lo.str() << "\" fill=\"" << col << "\" fill-opacity=\"0.15\"/>\n";
    os << "<polyline points=\"" << line.str() << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << W - R + 10 << "\" y=\"" << T + 16 * (ci + 1) << "\" font-size=\"12\" fill=\"" << col << "\">"
       << m << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

inline Json report_summary_json(const CompareReport& rep) {
  Json j;
  j["grouping"] = to_string(rep.options.grouping);
  j["units"] = rep.units;
  j["methods"] = rep.methods;
  j["budget_grid"] = rep.options.budget_grid;
  if (rep.mean_rho) {
    j["mean_pairwise_spearman"] = rep.mean_rho->mean;
    j["pairs_used"] = rep.mean_rho->pairs_used;
    j["pairs_skipped"] = rep.mean_rho->pairs_skipped;
  } else {
    j["mean_pairwise_spearman"] = nullptr;
  }
  Json dnc = Json::object();
  for (const auto& u : rep.unit_ranks) {
    if (!u.dnc.empty()) dnc[u.unit] = std::vector<std::string>(u.dnc.begin(), u.dnc.end());
  }
  j["dnc"] = dnc;
  j["warnings"] = rep.warnings;
  return j;
}

inline void write_report(const CompareReport& rep, const std::filesystem::path& out) {
  std::filesystem::create_directories(out);
  write_text_file((out / "rank_table.csv").string(), rank_table_csv(rep));
  write_text_file((out / "rank_table_long.csv").string(), rank_table_long_csv(rep));
  write_text_file((out / "rho_matrix.csv").string(), rho_matrix_csv(rep));
  write_text_file((out / "rank_trajectory.csv").string(), rank_trajectory_csv(rep));
  write_text_file((out / "convergence.csv").string(), convergence_csv(rep));
  write_text_file((out / "summary.json").string(), report_summary_json(rep).dump(2) + "\n");
  if (rep.options.svg) write_text_file((out / "rank_trajectory.svg").string(), rank_trajectory_svg(rep));
}

}  // namespace shapebench

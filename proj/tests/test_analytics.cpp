#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "shapebench/analytics/report.hpp"
#include "shapebench/rng.hpp"

using namespace shapebench;
namespace fs = std::filesystem;

namespace {

// 1 + #smaller + half the other ties
std::vector<double> rank_oracle(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double less = 0, tie = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++less;
      if (j != i && v[j] == v[i]) ++tie;
    }
    r[i] = 1.0 + less + 0.5 * tie;
  }
  return r;
}

std::map<std::string, double> as_map(const std::vector<double>& v) {
  std::map<std::string, double> m;
  for (std::size_t i = 0; i < v.size(); ++i) m["m" + std::to_string(i)] = v[i];
  return m;
}

std::vector<double> permutation(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  std::iota(p.begin(), p.end(), 1.0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

RunRecord rec(std::string task, std::string method, std::uint64_t seed, std::size_t budget, std::vector<double> rw,
              std::string env = "") {
  RunRecord r;
  r.task = task;
  r.environment = env.empty() ? task : env;
  r.method = std::move(method);
  r.seed = seed;
  r.budget = budget;
  r.rewards = std::move(rw);
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("shapebench_analytics_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_run(const fs::path& dir, const std::string& task, const std::string& method, std::uint64_t seed,
               std::size_t budget, const std::vector<double>& rewards, bool cut_last_line = false) {
  fs::create_directories(dir);
  std::ofstream(dir / "resolved_config.json")
      << Json{{"task", task}, {"method", method}, {"seed", seed}, {"budget", budget}}.dump();
  std::string csv = "iter,design_id,reward,best_reward,feasible,n_evals,wall_ms\n";
  double best = -1e300;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    best = std::max(best, rewards[i]);
    csv += std::to_string(i) + ",d" + std::to_string(i) + "," + format_double(rewards[i]) + "," + format_double(best) +
           ",1," + std::to_string(i + 1) + ",0\n";
  }
  if (cut_last_line) csv += "7,d7,12";
  std::ofstream(dir / "results.csv") << csv;
}

// The small two-task example used by several tests.
RunSet small_set() {
  return RunSet({rec("t1", "A", 1, 4, {1, 1, 5, 5}), rec("t1", "B", 1, 4, {3, 3, 3, 3}),
                 rec("t1", "C", 1, 4, {0, 2, 2, 4}), rec("t2", "A", 1, 2, {1, 2}), rec("t2", "B", 1, 2, {2, 2}),
                 rec("t2", "C", 1, 2, {0, 1})});
}

}  // namespace

TEST(BestSoFar, Examples) {
  const std::vector<double> r{1, 3, 2};
  EXPECT_EQ(best_so_far_at(r, 3, 1.0), 3);
  EXPECT_EQ(best_so_far_at(r, 3, 2.0 / 3.0), 3);
  EXPECT_EQ(best_so_far_at(r, 3, 1.0 / 3.0), 1);
  // early-stopped run: the last best persists
  EXPECT_EQ(best_so_far_at({4, 1}, 10, 0.9), 4);
  EXPECT_THROW(best_so_far_at({}, 3, 1.0), ContractError);
  EXPECT_THROW(best_so_far_at(r, 3, 0.0), ContractError);
  EXPECT_THROW(best_so_far_at(r, 3, 1.1), ContractError);
}

TEST(BestSoFar, PrefixOracleAndMonotone) {
  Rng rng(5, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t budget = 1 + rng.below(60);
    const std::size_t len = 1 + rng.below(budget);
    std::vector<double> r(len);
    for (auto& x : r) x = rng.normal();
    double prev = -1e300;
    // fractions a/20; ceil(a B / 20) in integers
    for (std::size_t a = 1; a <= 20; ++a) {
      const std::size_t k = std::min(std::max<std::size_t>((a * budget + 19) / 20, 1), len);
      const double want = *std::max_element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
      const double got = best_so_far_at(r, budget, static_cast<double>(a) / 20.0);
      ASSERT_EQ(got, want) << budget << " " << a;
      ASSERT_GE(got, prev);
      prev = got;
    }
  }
}

TEST(NormalizedRank, Examples) {
  auto r = normalized_rank({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}}, Sense::minimize);
  EXPECT_EQ(r["a"], 0.0);
  EXPECT_EQ(r["b"], 0.5);
  EXPECT_EQ(r["c"], 1.0);
  r = normalized_rank({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}}, Sense::maximize);
  EXPECT_EQ(r["c"], 0.0);
  EXPECT_EQ(r["a"], 1.0);
  r = normalized_rank({{"a", 1.0}, {"b", 1.0}, {"c", 3.0}}, Sense::minimize);
  EXPECT_EQ(r["a"], 0.0);
  EXPECT_EQ(r["b"], 0.0);
  EXPECT_EQ(r["c"], 1.0);
  r = normalized_rank({{"a", 2.0}, {"b", 2.0}}, Sense::minimize);
  EXPECT_EQ(r["a"], 0.5);
  EXPECT_EQ(r["b"], 0.5);
  EXPECT_THROW(normalized_rank({{"a", 1.0}}, Sense::minimize), ContractError);
  EXPECT_THROW(normalized_rank({{"a", 1.0}, {"b", std::nan("")}}, Sense::minimize), ContractError);
}

// Seven methods with ties, checked against counting ranks by hand.
TEST(NormalizedRank, MatchesCountingOracle) {
  Rng rng(8, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(7);
    for (auto& x : v) x = static_cast<double>(rng.below(5));  // many ties
    const auto got = normalized_rank(as_map(v), Sense::minimize);
    const auto r = rank_oracle(v);
    const double lo = *std::min_element(r.begin(), r.end()), hi = *std::max_element(r.begin(), r.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double want = hi > lo ? (r[i] - lo) / (hi - lo) : 0.5;
      ASSERT_NEAR(got.at("m" + std::to_string(i)), want, 1e-15);
    }
    double best = 2.0, worst = -1.0;
    for (const auto& [m, x] : got) {
      best = std::min(best, x);
      worst = std::max(worst, x);
    }
    if (hi > lo) {
      ASSERT_EQ(best, 0.0);
      ASSERT_EQ(worst, 1.0);
    }
  }
}

TEST(NormalizedRank, InvariantUnderMonotoneTransforms) {
  Rng rng(13, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    std::vector<double> v(n);
    for (auto& x : v) x = std::round(rng.normal() * 3.0) / 3.0;
    const auto base = normalized_rank(as_map(v), Sense::maximize);
    std::vector<double> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::exp(v[i]);
      b[i] = 7.0 * v[i] - 2.0;
      c[i] = v[i] * v[i] * v[i];
    }
    ASSERT_EQ(normalized_rank(as_map(a), Sense::maximize), base);
    ASSERT_EQ(normalized_rank(as_map(b), Sense::maximize), base);
    ASSERT_EQ(normalized_rank(as_map(c), Sense::maximize), base);
  }
}

TEST(Spearman, Examples) {
  EXPECT_DOUBLE_EQ(*spearman_rho({1, 2, 3, 4}, {1, 2, 3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(*spearman_rho({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0);
  EXPECT_NEAR(*spearman_rho({1, 2, 3, 4}, {1, 3, 2, 4}), 0.8, 1e-15);
  EXPECT_FALSE(spearman_rho({1, 1, 1}, {1, 2, 3}).has_value());
  EXPECT_THROW(spearman_rho({1, 2}, {1, 2}), ContractError);
  EXPECT_THROW(spearman_rho({1, 2, 3}, {1, 2}), ContractError);
}

// Without ties rho = 1 - 6 sum d^2 / (n (n^2 - 1)).
TEST(Spearman, ClosedFormAndSymmetry) {
  Rng rng(21, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng.below(10);
    const auto a = permutation(rng, n), b = permutation(rng, n);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
    const double nn = static_cast<double>(n);
    ASSERT_NEAR(*spearman_rho(a, b), 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0)), 1e-12);
    ASSERT_DOUBLE_EQ(*spearman_rho(a, b), *spearman_rho(b, a));
    ASSERT_DOUBLE_EQ(*spearman_rho(a, a), 1.0);
  }
}

TEST(Spearman, MeanPairwise) {
  const auto r = as_map({0.0, 0.5, 1.0});
  auto m = mean_pairwise_spearman({r, r});
  EXPECT_DOUBLE_EQ(m.mean, 1.0);
  EXPECT_EQ(m.pairs_used, 1u);

  // third ranking shares only two methods with the others: its pairs drop out
  std::map<std::string, double> partial{{"m0", 0.0}, {"m1", 1.0}};
  m = mean_pairwise_spearman({r, r, partial});
  EXPECT_DOUBLE_EQ(m.mean, 1.0);
  EXPECT_EQ(m.pairs_used, 1u);
  EXPECT_EQ(m.pairs_skipped, 2u);

  EXPECT_THROW(mean_pairwise_spearman({r}), ContractError);
  EXPECT_THROW(mean_pairwise_spearman({partial, partial}), ContractError);
}

TEST(Spearman, IndependentRankingsAverageNearZero) {
  Rng rng(34, 0);
  std::vector<std::map<std::string, double>> rankings;
  for (int k = 0; k < 50; ++k) rankings.push_back(as_map(permutation(rng, 7)));
  EXPECT_LT(std::abs(mean_pairwise_spearman(rankings).mean), 0.1);
}

TEST(MedianIqr, Examples) {
  auto s = median_iqr({5, 1, 4, 2, 3});
  EXPECT_EQ(s.median, 3);
  EXPECT_EQ(s.q25, 2);
  EXPECT_EQ(s.q75, 4);
  s = median_iqr({7});
  EXPECT_EQ(s.median, 7);
  EXPECT_EQ(s.q25, 7);
  EXPECT_EQ(s.q75, 7);
  s = median_iqr({1, 2, 3, 4});
  EXPECT_EQ(s.median, 2.5);
  EXPECT_EQ(s.q25, 1.75);
  EXPECT_EQ(s.q75, 3.25);
  EXPECT_THROW(median_iqr({}), ContractError);
}

TEST(RunSetTest, Invariants) {
  EXPECT_THROW(RunSet({rec("t", "A", 1, 10, {1}), rec("t", "B", 1, 20, {1})}), ConfigError);
  EXPECT_THROW(RunSet({rec("t", "A", 1, 10, {1}), rec("t", "A", 1, 10, {2})}), ConfigError);
  EXPECT_NO_THROW(RunSet({rec("t", "A", 1, 10, {1}), rec("t", "A", 2, 10, {2}), rec("u", "A", 1, 5, {2})}));
}

TEST(RunSetTest, LoadsDirectoriesAndDropsPartialLine) {
  const fs::path root = scratch("load");
  write_run(root / "t1/A/seed1", "t1", "A", 1, 8, {1, 2, 3}, true);
  write_run(root / "t1/B/seed1", "t1", "B", 1, 8, {0.5});
  write_run(root / "t1/C/seed1", "t1", "C", 1, 8, {});  // nothing evaluated yet
  const RunSet rs = RunSet::load({root});
  ASSERT_EQ(rs.runs().size(), 2u);
  EXPECT_EQ(rs.select("t1", "A").front()->rewards, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(rs.methods(), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(rs.budget_of("t1"), 8u);
  EXPECT_THROW(RunSet::load({root / "nope"}), ConfigError);

  std::ofstream(root / "t1/B/seed1/results.csv") << "bogus header\n";
  EXPECT_THROW(RunSet::load({root}), ConfigError);
}

TEST(RunSetTest, MixedBudgetsOnDiskRejected) {
  const fs::path root = scratch("mixed");
  write_run(root / "a", "t", "A", 1, 10, {1});
  write_run(root / "b", "t", "B", 1, 20, {1});
  EXPECT_THROW(RunSet::load({root}), ConfigError);
}

TEST(Compare, HandComputedRanks) {
  CompareOptions opt;
  opt.budget_grid = {0.5, 1.0};
  opt.plot_points = 2;
  const auto rep = compare_runs(small_set(), opt);
  ASSERT_EQ(rep.units, (std::vector<std::string>{"t1", "t2"}));
  const auto half = rep.fraction_index(0.5), full = rep.fraction_index(1.0);
  // t1 at half: A 1, B 3, C 2. At full: A 5, B 3, C 4.
  EXPECT_EQ(rep.unit_ranks[0].ranks[half], (std::map<std::string, double>{{"A", 1.0}, {"B", 0.0}, {"C", 0.5}}));
  EXPECT_EQ(rep.unit_ranks[0].ranks[full], (std::map<std::string, double>{{"A", 0.0}, {"B", 1.0}, {"C", 0.5}}));
  // t2 at full: A and B tie at 2
  EXPECT_EQ(rep.unit_ranks[1].ranks[full], (std::map<std::string, double>{{"A", 0.0}, {"B", 0.0}, {"C", 1.0}}));
  const auto s = rep.rank_summary("A", half);
  EXPECT_EQ(s.median, 0.75);
  EXPECT_EQ(s.q25, 0.625);
  EXPECT_EQ(s.q75, 0.875);
  // ranks (1,3,2) against (1.5,1.5,3): zero covariance
  EXPECT_NEAR(*rep.rho[0][1], 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(*rep.rho[0][0], 1.0);
  ASSERT_TRUE(rep.mean_rho.has_value());

  const std::string table = rank_table_csv(rep);
  EXPECT_EQ(table.substr(0, table.find('\n')), "method,50%,100%,dnc_units");
  EXPECT_NE(table.find("A,0.750±0.250,0.000±0.000,0\n"), std::string::npos) << table;
}

TEST(Compare, DncRankedLastAndExcludedFromRho) {
  auto runs = small_set().runs();
  runs.push_back(rec("t1", "D", 1, 4, {9, 9, 9, 9}));
  CompareOptions opt;
  opt.budget_grid = {1.0};
  opt.plot_points = 1;
  const auto rep = compare_runs(RunSet(runs), opt);
  EXPECT_EQ(rep.unit_ranks[1].ranks[0].at("D"), 1.0);
  EXPECT_EQ(rep.unit_ranks[1].dnc, (std::set<std::string>{"D"}));
  EXPECT_EQ(rep.dnc_count("D"), 1u);
  // rho over the shared A, B, C only: same as without D
  const auto base = compare_runs(small_set(), opt);
  EXPECT_EQ(*rep.rho[0][1], *base.rho[0][1]);
  bool flagged = false;
  for (const auto& w : rep.warnings) flagged = flagged || w.find("DNC: D") != std::string::npos;
  EXPECT_TRUE(flagged);
}

TEST(Compare, SingleMethodWarns) {
  const auto rep = compare_runs(RunSet({rec("t", "A", 1, 3, {1, 2, 3})}));
  EXPECT_FALSE(rep.warnings.empty());
  EXPECT_EQ(rep.unit_ranks[0].ranks[0].at("A"), 0.5);
  EXPECT_THROW(compare_runs(RunSet{}), ConfigError);
}

TEST(Compare, EnvironmentGroupingAveragesTaskRanks) {
  std::vector<RunRecord> runs = small_set().runs();
  for (auto& r : runs) r.environment = "E";
  CompareOptions opt;
  opt.grouping = Grouping::environment;
  opt.budget_grid = {1.0};
  opt.plot_points = 1;
  const auto rep = compare_runs(RunSet(runs), opt);
  ASSERT_EQ(rep.units, std::vector<std::string>{"E"});
  // mean task ranks: A 0, B 0.5, C 0.75
  EXPECT_EQ(rep.unit_ranks[0].ranks[0], (std::map<std::string, double>{{"A", 0.0}, {"B", 0.5}, {"C", 1.0}}));
  EXPECT_EQ(parse_grouping("environment"), Grouping::environment);
  EXPECT_THROW(parse_grouping("seed"), ConfigError);
}

// Ranks at fraction f only depend on the first ceil(f B) rewards of each run.
TEST(Compare, PrefixDeterminism) {
  Rng rng(55, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t budget = 10 + rng.below(30);
    std::vector<RunRecord> runs;
    for (const char* m : {"A", "B", "C", "D"}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        std::vector<double> rw(budget);
        for (auto& x : rw) x = rng.normal();
        runs.push_back(rec("t", m, s, budget, rw));
      }
    }
    CompareOptions opt;
    opt.budget_grid = {0.4, 1.0};
    opt.plot_points = 1;
    const auto a = compare_runs(RunSet(runs), opt);
    const std::size_t k = (4 * budget + 9) / 10;
    for (auto& r : runs) {
      for (std::size_t i = k; i < budget; ++i) r.rewards[i] = rng.normal() * 10.0;
    }
    const auto b = compare_runs(RunSet(runs), opt);
    ASSERT_EQ(a.unit_ranks[0].ranks[0], b.unit_ranks[0].ranks[0]);
  }
}

TEST(Compare, WritesReportFiles) {
  const fs::path out = scratch("report");
  CompareOptions opt;
  opt.svg = true;
  opt.plot_points = 4;
  const auto rep = compare_runs(small_set(), opt);
  write_report(rep, out);
  for (const char* f : {"rank_table.csv", "rank_table_long.csv", "rho_matrix.csv", "rank_trajectory.csv",
                        "convergence.csv", "summary.json", "rank_trajectory.svg"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const Json s = read_json_file((out / "summary.json").string());
  EXPECT_EQ(s["methods"], Json::array({"A", "B", "C"}));
  const std::string traj = rank_trajectory_csv(rep);
  EXPECT_EQ(std::count(traj.begin(), traj.end(), '\n'), 1 + 3 * 4);
  const std::string rho = rho_matrix_csv(rep);
  EXPECT_EQ(rho.substr(0, rho.find('\n')), ",t1,t2");
}

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "shapebench/optimizers/fd_gradient.hpp"
#include "shapebench/problems/catalog.hpp"
#include "shapebench/problems/subprocess.hpp"

using namespace shapebench;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::builtin();
  return c;
}

DesignPoint centre(const ParamSpace& s) {
  return s.denormalize(std::vector<double>(s.relaxed_dim(), 0.5));
}

// O(n^2) dominance filter.
std::vector<std::size_t> brute_front(const std::vector<std::vector<double>>& pts, const std::vector<Sense>& senses) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      bool all = true, strict = false;
      for (std::size_t k = 0; k < senses.size(); ++k) {
        const double a = senses[k] == Sense::maximize ? pts[j][k] : -pts[j][k];
        const double b = senses[k] == Sense::maximize ? pts[i][k] : -pts[i][k];
        all = all && a >= b;
        strict = strict || a > b;
      }
      dominated = all && strict;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

double naca_thickness(double x) {
  return 2.0 * 5.0 * 0.12 *
         (0.2969 * std::sqrt(x) - 0.1260 * x - 0.3516 * x * x + 0.2843 * x * x * x - 0.1036 * x * x * x * x);
}

}  // namespace

TEST(Formulas, PenalizedRewardComposesInTaskSense) {
  EXPECT_EQ(penalized_reward(300.0, {{"v", 1.0}}, 500.0), -200.0);
  EXPECT_EQ(penalized_reward(0.02, {{"a", 0.5}, {"b", 0.25}}, 6000.0, Sense::minimize), 0.02 + 4500.0);
  EXPECT_EQ(penalized_reward(7.0, {}, 500.0), 7.0);
  EXPECT_THROW(penalized_reward(1.0, {{"v", 1.5}}, 500.0), ContractError);
  EXPECT_THROW(penalized_reward(1.0, {{"v", -0.1}}, 500.0), ContractError);
  EXPECT_THROW(penalized_reward(1.0, {}, -1.0), ContractError);
}

TEST(Formulas, ReynoldsSchedule) {
  EXPECT_EQ(reynolds_schedule(1.25), 500000.0);
  EXPECT_NEAR(reynolds_schedule(0.8), 625000.0, 625000.0 * 1e-12);
  EXPECT_NEAR(reynolds_schedule(0.3125), 1000000.0, 1e-6);
  EXPECT_THROW(reynolds_schedule(0.0), ContractError);
  EXPECT_THROW(reynolds_schedule(-1.0), ContractError);
}

TEST(Formulas, WeightedMultipointAndRobustMin) {
  const std::vector<double> v{10.0, 20.0, 40.0}, w{1.0, 1.0, 2.0};
  EXPECT_DOUBLE_EQ(weighted_multipoint(v, w), 27.5);
  EXPECT_EQ(robust_min(v), 10.0);
  const std::vector<double> zero{0.0, 0.0, 0.0}, bad{1.0, -1.0, 1.0}, one{1.0};
  EXPECT_THROW(weighted_multipoint(v, zero), ContractError);
  EXPECT_THROW(weighted_multipoint(v, bad), ContractError);
  EXPECT_THROW(weighted_multipoint(v, one), ContractError);
  EXPECT_THROW(robust_min(std::vector<double>{}), ContractError);
}

TEST(Formulas, CarDragCoefficient) {
  EXPECT_NEAR(car_drag_coefficient(120.70740509033203, 33.71821975708008), 0.06515849149679837, 1e-15);
  EXPECT_DOUBLE_EQ(car_drag_coefficient(2370.0, 0.0), 1.0);
}

TEST(Bisection, ErrorBoundOnRandomMonotoneLift) {
  Rng r(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const double slope = (r.uniform() < 0.5 ? -1.0 : 1.0) * r.uniform(0.02, 0.3);
    const double cl0 = r.uniform(-0.5, 0.5);
    const double lo = r.uniform(-10.0, 0.0), hi = lo + r.uniform(1.0, 25.0);
    const double alpha_star = r.uniform(lo, hi);
    const double target = cl0 + slope * alpha_star;
    const int iters = 1 + static_cast<int>(r.below(16));
    auto cl = [&](double a) { return cl0 + slope * a; };
    const auto res = bisect_alpha_to_cl(cl, target, lo, hi, iters);
    ASSERT_TRUE(res.bracketed);
    ASSERT_LE(std::abs(res.alpha - alpha_star), (hi - lo) / std::ldexp(1.0, iters) + 1e-12);
    ASSERT_LE(res.evaluations, iters + 2);
  }
}

TEST(Bisection, NonlinearMonotone) {
  auto cl = [](double a) { return std::tanh(0.1 * a) + 0.2; };
  const double target = std::tanh(0.1 * 3.3) + 0.2;
  const auto res = bisect_alpha_to_cl(cl, target, -5.0, 12.0, 20);
  EXPECT_LE(std::abs(res.alpha - 3.3), 17.0 / std::ldexp(1.0, 20));
}

TEST(Bisection, UnbracketedReturnsNearerEndpoint) {
  auto cl = [](double a) { return 0.1 * a; };
  auto high = bisect_alpha_to_cl(cl, 5.0, -5.0, 12.0, 8);
  EXPECT_FALSE(high.bracketed);
  EXPECT_EQ(high.alpha, 12.0);
  auto low = bisect_alpha_to_cl(cl, -3.0, -5.0, 12.0, 8);
  EXPECT_FALSE(low.bracketed);
  EXPECT_EQ(low.alpha, -5.0);
  EXPECT_THROW(bisect_alpha_to_cl(cl, 0.0, 1.0, 1.0, 8), ContractError);
  EXPECT_THROW(bisect_alpha_to_cl(cl, 0.0, -1.0, 1.0, 0), ContractError);
}

TEST(IntegratedDrag, LinearInEachCell) {
  Rng r(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SurfaceCell> a(20), b(20), sum(20);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double area = r.uniform(0.01, 1.0), nx = r.uniform(-1.0, 1.0);
      a[i] = {r.uniform(-1.0, 1.0), r.uniform(0.0, 0.01), area, nx};
      b[i] = {r.uniform(-1.0, 1.0), r.uniform(0.0, 0.01), area, nx};
      sum[i] = {a[i].cp + b[i].cp, a[i].cfx + b[i].cfx, area, nx};
    }
    const double s = r.uniform(0.5, 3.0);
    ASSERT_NEAR(integrated_drag(sum, s), integrated_drag(a, s) + integrated_drag(b, s), 1e-12);
    // splitting a cell into two halves leaves the integral unchanged
    std::vector<SurfaceCell> split(a.begin() + 1, a.end());
    SurfaceCell half = a[0];
    half.area *= 0.5;
    split.push_back(half);
    split.push_back(half);
    ASSERT_NEAR(integrated_drag(split, s), integrated_drag(a, s), 1e-12);
  }
  const std::vector<SurfaceCell> one{{0.5, 0.01, 2.0, 1.0}};
  EXPECT_DOUBLE_EQ(integrated_drag(one, 2.0), 0.51);
  EXPECT_THROW(integrated_drag(one, 0.0), ContractError);
}

TEST(Pareto, MatchesBruteForce) {
  Rng r(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + r.below(200);
    const std::size_t m = 2 + r.below(3);
    std::vector<Sense> senses(m);
    for (auto& s : senses) s = r.below(2) ? Sense::maximize : Sense::minimize;
    const bool grid = trial % 2 == 0;  // coarse grid forces ties and duplicates
    std::vector<std::vector<double>> pts(n, std::vector<double>(m));
    for (auto& p : pts) {
      for (auto& x : p) x = grid ? static_cast<double>(r.below(5)) : r.normal();
    }
    ASSERT_EQ(pareto_front(pts, senses), brute_front(pts, senses)) << "trial " << trial;
  }
  const std::vector<Sense> s2{Sense::minimize, Sense::minimize};
  EXPECT_THROW(pareto_front({}, s2), ContractError);
  EXPECT_THROW(pareto_front({{1.0}}, s2), ContractError);
}

TEST(Expression, PrecedenceAndFunctions) {
  auto eval = [](const std::string& s) {
    return Expression(s).evaluate([](std::string_view n) -> std::optional<double> {
      if (n == "CL") return 0.5;
      if (n == "CD") return 0.02;
      if (n == "mach") return 0.8;
      return std::nullopt;
    });
  };
  EXPECT_DOUBLE_EQ(eval("1 + 2 * 3"), 7.0);
  EXPECT_DOUBLE_EQ(eval("2 ^ 3 ^ 2"), 512.0);
  EXPECT_DOUBLE_EQ(eval("-2 ^ 2"), -4.0);
  EXPECT_DOUBLE_EQ(eval("(1 + 2) * 3"), 9.0);
  EXPECT_DOUBLE_EQ(eval("CL / CD"), 25.0);
  EXPECT_DOUBLE_EQ(eval("-mach * CL / CD + 1.0 * (mach^2 * CL - mach * 0.4)^2"), -20.0 + std::pow(0.32 - 0.32, 2));
  EXPECT_DOUBLE_EQ(eval("abs(-3) + min(1, 2) + max(1, 2) + sqrt(16)"), 10.0);
  EXPECT_DOUBLE_EQ(eval("clamp(5, 0, 1) + pow(2, 10)"), 1025.0);
  EXPECT_NEAR(eval("exp(log(3))"), 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(eval("1e-3 * 2"), 0.002);
  EXPECT_THROW(eval("unknown + 1"), std::exception);
  EXPECT_THROW(Expression("1 +"), ConfigError);
  EXPECT_THROW(Expression("(1"), ConfigError);
  EXPECT_THROW(Expression("1 2"), ConfigError);
  EXPECT_EQ(Expression("CL / CD + max(0, 0.45 - CL)^2").identifiers(), (std::set<std::string>{"CD", "CL"}));
}

TEST(Geometry, NacaFitTracksTheClosedFormThickness) {
  const KulfanAirfoil a = naca0012();
  for (double x : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) EXPECT_NEAR(a.thickness(x), naca_thickness(x), 3e-4) << x;
  EXPECT_EQ(a.le_angle(), 180.0);
  EXPECT_NEAR(a.camber(0.4), 0.0, 1e-15);
}

TEST(Geometry, WigglinessIsSumOfSquaredSecondDifferences) {
  KulfanAirfoil a;
  a.upper = {0.1, 0.3, 0.2, 0.4};
  a.lower = {-0.1, -0.1, -0.1, -0.1};
  // (0.2-0.6+0.1)^2 + (0.4-0.4+0.3)^2
  EXPECT_NEAR(a.wiggliness(), 0.09 + 0.09, 1e-15);
  const KulfanAirfoil n = naca0012();
  double w = 0.0;
  for (std::size_t i = 1; i + 1 < kNaca0012Weights.size(); ++i) {
    const double d = kNaca0012Weights[i - 1] - 2 * kNaca0012Weights[i] + kNaca0012Weights[i + 1];
    w += 2 * d * d;
  }
  EXPECT_NEAR(naca0012_wiggliness(), w, 1e-15);
  EXPECT_EQ(n.wiggliness(), naca0012_wiggliness());
}

TEST(Geometry, CrossedLeadingEdgeClosesTheAngle) {
  KulfanAirfoil a = naca0012();
  a.lower.front() = a.upper.front() + 0.01;
  EXPECT_LT(a.le_angle(), 180.0);
  a.lower.front() = a.upper.front() + 0.05;
  EXPECT_NEAR(a.le_angle(), 90.0, 1e-12);
}

TEST(Confidence, BoxProxy) {
  const std::vector<double> mid(6, 0.5), corner{0, 1, 0, 1, 1, 0};
  EXPECT_DOUBLE_EQ(box_confidence(mid), 1.0);
  EXPECT_DOUBLE_EQ(box_confidence(corner), 0.85);
}

TEST(Catalog, EveryTaskBuildsAndEvaluatesAtTheCentre) {
  std::set<std::string> ids;
  for (const auto& id : catalog().ids()) {
    ASSERT_TRUE(ids.insert(id).second) << id;
    ProblemEnvironment env = catalog().make(id);
    EXPECT_EQ(env.id(), id);
    const EvalResult r = env.evaluate(centre(env.space()));
    EXPECT_TRUE(r.ok()) << id << ": " << r.error.value_or("");
    EXPECT_TRUE(std::isfinite(r.reward)) << id;
    EXPECT_EQ(r.per_point.size(), env.points().size()) << id;
    EXPECT_EQ(env.evaluation_count(), 1u) << id;
    EXPECT_GE(r.confidence, 0.85);
    EXPECT_LE(r.confidence, 1.0);
  }
  EXPECT_GE(ids.size(), 20u);
  EXPECT_THROW(catalog().make("no_such_task"), ConfigError);
}

TEST(Catalog, ExportRoundTripsThroughAFile) {
  const auto path = std::filesystem::temp_directory_path() / "shapebench_catalog_roundtrip.json";
  write_text_file(path.string(), catalog().document().dump(1));
  const Catalog c = Catalog::from_file(path.string());
  EXPECT_EQ(c.ids(), catalog().ids());
  EXPECT_EQ(c.version(), catalog().version());
  ::setenv(kCatalogEnvVar, path.c_str(), 1);
  EXPECT_EQ(Catalog::load().ids(), catalog().ids());
  ::setenv(kCatalogEnvVar, "/nonexistent/catalog.json", 1);
  EXPECT_THROW(Catalog::load(), ConfigError);
  ::unsetenv(kCatalogEnvVar);
  std::filesystem::remove(path);
}

TEST(Catalog, ShippedFileMatchesEmbeddedCopy) {
  const Json shipped = read_json_file(std::string(SHAPEBENCH_SOURCE_DIR) + "/catalog/shapebench_catalog.json");
  EXPECT_EQ(shipped, catalog().document());
}

TEST(Environment, OneBudgetUnitPerDesignWhateverThePointCount) {
  ProblemEnvironment env = catalog().make("swept_wing_mp");
  ASSERT_GT(env.points().size(), 1u);
  for (const auto& p : env.space().sample_uniform(4, 5)) env.evaluate(p);
  EXPECT_EQ(env.evaluation_count(), 5u);
  env.reset_evaluation_count();
  EXPECT_EQ(env.evaluation_count(), 0u);
}

TEST(Environment, InvalidDesignIsNotCharged) {
  ProblemEnvironment env = catalog().make("sphere_10d");
  DesignPoint p = centre(env.space());
  p.values.begin()->second = 99.0;
  EXPECT_THROW(env.evaluate(p), SpaceError);
  EXPECT_EQ(env.evaluation_count(), 0u);
}

TEST(Environment, MinimizationIsNegatedIntoReward) {
  ProblemEnvironment env = catalog().make("sphere_10d");
  const EvalResult r = env.evaluate(centre(env.space()));
  EXPECT_EQ(env.sense(), Sense::minimize);
  EXPECT_DOUBLE_EQ(r.reward, -r.raw);
  EXPECT_DOUBLE_EQ(r.raw, r.metrics.at("f"));
}

TEST(Environment, PenaltyMakesInfeasibleAirfoilsUnprofitable) {
  ProblemEnvironment env = catalog().make("airfoil_sp");
  ASSERT_EQ(env.penalty_weight(), 500.0);
  double worst_feasible = HUGE_VAL, best_heavy = -HUGE_VAL;
  int feasible = 0, heavy = 0;
  for (const auto& p : env.space().sample_uniform(17, 3000)) {
    const EvalResult r = env.evaluate(p);
    ASSERT_TRUE(r.ok());
    ASSERT_LT(std::abs(r.raw), 500.0);
    double total = 0.0;
    for (const auto& [k, v] : r.violations) total += v;
    if (r.feasible) {
      worst_feasible = std::min(worst_feasible, r.reward);
      ++feasible;
    } else if (total >= 1.0) {
      best_heavy = std::max(best_heavy, r.reward);
      ++heavy;
    }
  }
  // the centre of the box is the NACA-like reference and is feasible
  const EvalResult c = env.evaluate(centre(env.space()));
  if (c.feasible) {
    worst_feasible = std::min(worst_feasible, c.reward);
    ++feasible;
  }
  ASSERT_GT(heavy, 0);
  if (feasible > 0) {
    EXPECT_LT(best_heavy, worst_feasible);
  }
  EXPECT_LT(best_heavy, 0.0);
}

TEST(Environment, AlphaSolvedPointsReportTheirIncidence) {
  ProblemEnvironment env = catalog().make("bwb_ld");
  ASSERT_TRUE(env.alpha_solve().has_value());
  const EvalResult r = env.evaluate(centre(env.space()));
  ASSERT_TRUE(r.ok());
  for (const auto& m : r.per_point) {
    ASSERT_TRUE(m.count("alpha"));
    EXPECT_GE(m.at("alpha"), -5.0);
    EXPECT_LE(m.at("alpha"), 12.0);
    if (m.at("bracketed") == 1.0) {
      EXPECT_LE(std::abs(m.at("cl_residual")), 0.5);
    }
  }
}

TEST(Environment, MultiObjectiveScalarizesWithUnitWeights) {
  ProblemEnvironment env = catalog().make("delta_wing_mo_a");
  ASSERT_TRUE(env.multi_objective());
  const EvalResult r = env.evaluate(centre(env.space()));
  ASSERT_EQ(r.objectives.size(), 2u);
  double expect = 0.0;
  for (std::size_t i = 0; i < r.objectives.size(); ++i) {
    const auto& o = env.objectives()[i];
    expect += o.weight * (o.sense == Sense::maximize ? r.objectives[i] : -r.objectives[i]);
  }
  EXPECT_DOUBLE_EQ(r.raw, expect);
  EXPECT_DOUBLE_EQ(r.reward, r.raw);
}

TEST(Environment, StaticMarginComesFromAFiniteDifference) {
  ProblemEnvironment env = catalog().make("delta_wing_mo_kn");
  const EvalResult r = env.evaluate(centre(env.space()));
  ASSERT_TRUE(r.ok()) << r.error.value_or("");
  EXPECT_TRUE(std::isfinite(r.per_point.front().at("Kn")));
}

TEST(Environment, CopiesAreIndependentAndDeterministic) {
  ProblemEnvironment a = catalog().make("cca_ld");
  ProblemEnvironment b = a;
  for (const auto& p : a.space().sample_uniform(2, 20)) {
    const EvalResult ra = a.evaluate(p), rb = b.evaluate(p);
    ASSERT_EQ(ra.reward, rb.reward);
    ASSERT_EQ(ra.metrics, rb.metrics);
  }
  EXPECT_EQ(a.evaluation_count(), 20u);
}

TEST(StandIn, AnalyticGradientMatchesFiniteDifferences) {
  for (const char* id : {"airfoil_sp", "bwb_ld", "swept_wing_sp", "car_cd", "ceras_fuel"}) {
    ProblemEnvironment env = catalog().make(id);
    const auto* land = dynamic_cast<const StandInLandscape*>(&env.evaluator());
    ASSERT_NE(land, nullptr) << id;
    Rng r(5);
    OperatingPoint op = env.points().front();
    if (!op.alpha) op.alpha = 2.0;
    for (int t = 0; t < 10; ++t) {
      std::vector<double> u(land->dim());
      for (auto& x : u) x = r.uniform(0.05, 0.95);
      for (std::size_t k = 0; k < land->field_specs().size(); ++k) {
        std::vector<double> g(u.size());
        land->metric_gradient(k, u, op, g);
        const std::string name = land->field_specs()[k].name;
        auto f = [&](std::span<const double> x) { return land->metrics_at(x, op).at(name); };
        const auto fd = fd_gradient(f, u, 1e-5);
        for (std::size_t i = 0; i < u.size(); ++i) ASSERT_NEAR(g[i], fd[i], 1e-5) << id << " " << name;
      }
    }
  }
}

TEST(Analytic, GradientsMatchFiniteDifferences) {
  for (const char* id : {"sphere_10d", "quadratic_10d", "rotated_quadratic_10d", "rosenbrock_2d", "forrester_1d",
                         "linear_3d"}) {
    ProblemEnvironment env = catalog().make(id);
    const auto* fn = dynamic_cast<const AnalyticEvaluator*>(&env.evaluator());
    ASSERT_NE(fn, nullptr);
    Rng r(9);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> x(env.space().size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& v = env.space().variables()[i];
        x[i] = v.lower + r.uniform(0.1, 0.9) * (v.upper - v.lower);
      }
      const auto g = fn->gradient(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto xp = x, xm = x;
        const double h = 1e-6;
        xp[i] += h;
        xm[i] -= h;
        ASSERT_NEAR(g[i], (fn->value(xp) - fn->value(xm)) / (2 * h), 1e-5 * std::max(1.0, std::abs(g[i]))) << id;
      }
    }
  }
}

TEST(Analytic, KnownOptima) {
  ProblemEnvironment sphere = catalog().make("sphere_10d");
  const auto* fn = dynamic_cast<const AnalyticEvaluator*>(&sphere.evaluator());
  const std::vector<double> c{-0.5, -0.4, -0.3, -0.2, -0.1, 0.0, 0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(fn->value(c), 0.0);
  ProblemEnvironment rosen = catalog().make("rosenbrock_2d");
  const auto* rf = dynamic_cast<const AnalyticEvaluator*>(&rosen.evaluator());
  EXPECT_EQ(rf->value({1.0, 1.0}), 0.0);
  ProblemEnvironment forr = catalog().make("forrester_1d");
  const auto* ff = dynamic_cast<const AnalyticEvaluator*>(&forr.evaluator());
  EXPECT_NEAR(ff->value({0.75724876}), -6.020740055, 1e-7);
}

TEST(Subprocess, EchoRoundTrip) {
  const ParamSpace s({VariableSpec::continuous("a", -1, 1), VariableSpec::continuous("b", -1, 1)});
  SubprocessEvaluator ev(SHAPEBENCH_ECHO_EVALUATOR, 10.0);
  Rng r(1);
  for (int i = 0; i < 200; ++i) {
    DesignPoint p;
    p.values["a"] = r.uniform(-1, 1);
    p.values["b"] = r.uniform(-1, 1);
    const Metrics m = ev.evaluate(s, p, OperatingPoint{});
    ASSERT_EQ(m.at("a"), p.number("a"));
    ASSERT_EQ(m.at("b"), p.number("b"));
  }
}

TEST(Subprocess, FailuresBecomeEvaluationErrors) {
  const ParamSpace s({VariableSpec::continuous("a", -1, 1)});
  DesignPoint p;
  p.values["a"] = 0.5;
  const std::string echo = SHAPEBENCH_ECHO_EVALUATOR;

  SubprocessEvaluator failing(echo + " --fail-every 2", 10.0);
  EXPECT_NO_THROW(failing.evaluate(s, p, {}));
  EXPECT_THROW(failing.evaluate(s, p, {}), EvaluationError);
  EXPECT_NO_THROW(failing.evaluate(s, p, {}));

  SubprocessEvaluator crashing(echo + " --crash-after 1", 10.0);
  EXPECT_NO_THROW(crashing.evaluate(s, p, {}));
  EXPECT_THROW(crashing.evaluate(s, p, {}), EvaluationError);
  EXPECT_NO_THROW(crashing.evaluate(s, p, {}));  // restarted child

  SubprocessEvaluator garbage(echo + " --garbage-after 0", 10.0);
  EXPECT_THROW(garbage.evaluate(s, p, {}), EvaluationError);

  SubprocessEvaluator slow("sleep 5", 0.3);
  EXPECT_THROW(slow.evaluate(s, p, {}), EvaluationError);

  SubprocessEvaluator missing("/nonexistent/evaluator-binary", 5.0);
  EXPECT_THROW(missing.evaluate(s, p, {}), EvaluationError);
}

TEST(Subprocess, EnvironmentRecordsErrorsWithoutThrowing) {
  ProblemEnvironment env = catalog().make(
      "sphere_10d", std::make_unique<SubprocessEvaluator>(std::string(SHAPEBENCH_ECHO_EVALUATOR) + " --crash-after 0"));
  const EvalResult r = env.evaluate(centre(env.space()));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.reward, -std::numeric_limits<double>::infinity());
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(env.evaluation_count(), 1u);
}

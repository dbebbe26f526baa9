#include <gtest/gtest.h>

#include <cmath>

#include "shapebench/param_space.hpp"
#include "shapebench/problems/catalog.hpp"

using namespace shapebench;

namespace {

ParamSpace mixed_space() {
  return ParamSpace({VariableSpec::continuous("span", 30.0, 40.0, "m"),
                     VariableSpec::continuous("twist", -3.0, 3.0, "deg"),
                     VariableSpec::discrete("altitude", {30000, 32000, 34000, 36000}, "ft"),
                     VariableSpec::discrete("n_pax", {150, 170, 220}),
                     VariableSpec::categorical("engine", {"turbofan", "open_rotor", "hybrid"}),
                     VariableSpec::categorical("tail", {"t", "conventional"})});
}

bool in_cube(const std::vector<double>& u) {
  for (double x : u) {
    if (!(x >= 0.0 && x <= 1.0)) return false;
  }
  return true;
}

}  // namespace

TEST(Rng, PhiloxKnownAnswers) {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  EXPECT_EQ(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Rng, StreamsReproduceAndDiffer) {
  Rng a(7, 3), b(7, 3), c(7, 4);
  int same_c = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    ASSERT_EQ(x, b.next_u64());
    same_c += x == c.next_u64();
  }
  EXPECT_EQ(same_c, 0);
}

TEST(Rng, UniformMomentsAndRange) {
  Rng r(11);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12.0, 0.002);
}

TEST(Rng, NormalMoments) {
  Rng r(5);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, BelowIsUnbiasedOverSmallRange) {
  Rng r(99);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[r.below(6)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(ParamSpace, RelaxedDimensions) {
  EXPECT_EQ(mixed_space().relaxed_dim(), 2u + 2u + 3u + 2u);
  const Catalog cat = Catalog::builtin();
  EXPECT_EQ(cat.make("ceras_fuel").space().relaxed_dim(), 12u);
  for (const char* id : {"airfoil_sp", "swept_wing_sp", "car_cd", "sphere_10d"}) {
    const auto env = cat.make(id);
    EXPECT_EQ(env.space().relaxed_dim(), env.space().size()) << id;
  }
}

TEST(ParamSpace, RejectsMalformedVariables) {
  EXPECT_THROW(ParamSpace({VariableSpec::continuous("a", 1.0, 1.0)}), SpaceError);
  EXPECT_THROW(ParamSpace({VariableSpec::continuous("a", 2.0, 1.0)}), SpaceError);
  EXPECT_THROW(ParamSpace({VariableSpec::discrete("d", {1.0})}), SpaceError);
  EXPECT_THROW(ParamSpace({VariableSpec::discrete("d", {1.0, 1.0})}), SpaceError);
  EXPECT_THROW(ParamSpace({VariableSpec::categorical("c", {"x"})}), SpaceError);
  EXPECT_THROW(ParamSpace({VariableSpec::continuous("a", 0, 1), VariableSpec::continuous("a", 0, 1)}), SpaceError);
}

TEST(ParamSpace, ValidateCatchesBadDesigns) {
  const ParamSpace s = mixed_space();
  DesignPoint p = s.sample_uniform(1, 1).front();
  EXPECT_NO_THROW(s.validate(p));

  DesignPoint q = p;
  q.values["span"] = 41.0;
  EXPECT_THROW(s.validate(q), SpaceError);
  q = p;
  q.values["altitude"] = 31000.0;
  EXPECT_THROW(s.validate(q), SpaceError);
  q = p;
  q.values["engine"] = std::string("ramjet");
  EXPECT_THROW(s.validate(q), SpaceError);
  q = p;
  q.values.erase("tail");
  EXPECT_THROW(s.validate(q), SpaceError);
  q = p;
  q.values["wingspan"] = 3.0;
  EXPECT_THROW(s.validate(q), SpaceError);
  q = p;
  q.values["twist"] = std::nan("");
  EXPECT_THROW(s.validate(q), SpaceError);
}

TEST(ParamSpace, EncodingOfKnownPoint) {
  const ParamSpace s = mixed_space();
  DesignPoint p;
  p.values = {{"span", 32.5},       {"twist", 3.0},      {"altitude", 34000.0},
              {"n_pax", 220.0},     {"engine", std::string("hybrid")}, {"tail", std::string("t")}};
  const std::vector<double> expect{0.25, 1.0, 2.0 / 3.0, 1.0, 0, 0, 1, 1, 0};
  const auto u = s.normalize(p);
  ASSERT_EQ(u.size(), expect.size());
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_DOUBLE_EQ(u[i], expect[i]) << i;
}

TEST(ParamSpace, DiscreteUsesLevelIndexNotValue) {
  const ParamSpace s({VariableSpec::discrete("k", {1.0, 2.0, 100.0})});
  DesignPoint p;
  p.values["k"] = 2.0;
  EXPECT_DOUBLE_EQ(s.normalize(p)[0], 0.5);
}

TEST(ParamSpace, DecodeTieBreaks) {
  const ParamSpace s({VariableSpec::discrete("k", {10.0, 20.0, 30.0}), VariableSpec::categorical("c", {"a", "b", "c"})});
  const std::vector<double> u1{0.25, 0.3, 0.7, 0.7};
  auto p = s.denormalize(u1);
  EXPECT_EQ(p.number("k"), 10.0);  // halfway between levels 0 and 1
  EXPECT_EQ(p.label("c"), "b");    // tie between b and c
  const std::vector<double> u2{0.2500001, 0.0, 0.0, 0.0};
  p = s.denormalize(u2);
  EXPECT_EQ(p.number("k"), 20.0);
  EXPECT_EQ(p.label("c"), "a");
}

TEST(ParamSpace, RoundTripValidPoints) {
  const ParamSpace s = mixed_space();
  for (const auto& p : s.sample_uniform(123, 2000)) {
    const DesignPoint back = s.denormalize(s.normalize(p));
    for (const auto& v : s.variables()) {
      if (v.kind == VariableKind::continuous) {
        const double a = p.number(v.name), b = back.number(v.name);
        ASSERT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a))) << v.name;
      } else {
        ASSERT_EQ(p.values.at(v.name), back.values.at(v.name)) << v.name;
      }
    }
  }
}

TEST(ParamSpace, UnitCubeImageIsStable) {
  const ParamSpace s = mixed_space();
  Rng r(77);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> u(s.relaxed_dim());
    for (auto& x : u) x = r.uniform();
    if (i % 10 == 0) u[0] = 1.0;
    const auto once = s.normalize(s.denormalize(u));
    ASSERT_TRUE(in_cube(once));
    const auto twice = s.normalize(s.denormalize(once));
    ASSERT_EQ(once, twice);
  }
}

TEST(ParamSpace, DenormalizeRejectsWrongLength) {
  const ParamSpace s = mixed_space();
  EXPECT_THROW(s.denormalize(std::vector<double>(3, 0.5)), SpaceError);
  std::vector<double> u(s.relaxed_dim(), 0.5);
  u[2] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(s.denormalize(u), SpaceError);
}

TEST(ParamSpace, ClipIsIdempotentProjection) {
  const ParamSpace s = mixed_space();
  Rng r(3);
  const std::vector<std::string> engines{"turbofan", "open_rotor", "hybrid"};
  for (int i = 0; i < 2000; ++i) {
    DesignPoint p;
    p.values["span"] = r.uniform(0.0, 80.0);
    p.values["twist"] = r.uniform(-10.0, 10.0);
    p.values["altitude"] = r.uniform(20000.0, 50000.0);
    p.values["n_pax"] = r.uniform(0.0, 400.0);
    p.values["engine"] = engines[r.below(3)];
    p.values["tail"] = std::string(r.below(2) ? "t" : "conventional");
    const DesignPoint once = s.clip(p);
    ASSERT_NO_THROW(s.validate(once));
    ASSERT_EQ(s.clip(once), once);
  }
  DesignPoint snap;
  snap.values = {{"span", 35.0},    {"twist", 0.0},  {"altitude", 33000.0},
                 {"n_pax", 160.0},  {"engine", std::string("hybrid")}, {"tail", std::string("t")}};
  const DesignPoint c = s.clip(snap);
  EXPECT_EQ(c.number("altitude"), 32000.0);  // equidistant, lower level
  EXPECT_EQ(c.number("n_pax"), 150.0);
}

TEST(ParamSpace, SamplesAreReproducibleAndValid) {
  const ParamSpace s = mixed_space();
  const auto a = s.sample_uniform(5, 300);
  const auto b = s.sample_uniform(5, 300);
  const auto c = s.sample_uniform(6, 300);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& p : a) EXPECT_NO_THROW(s.validate(p));
  EXPECT_THROW(s.sample_uniform(5, 0), SpaceError);
}

TEST(ParamSpace, JsonRoundTrip) {
  const ParamSpace s = mixed_space();
  const ParamSpace t = ParamSpace::from_json(s.to_json());
  EXPECT_EQ(t.to_json(), s.to_json());
  EXPECT_EQ(t.relaxed_dim(), s.relaxed_dim());
}

TEST(ParamSpace, DesignFileNameIsMetadata) {
  const Json j = Json::parse(R"({"name": "vtk_E_001", "span": 35.0, "twist": -1.0, "altitude": 30000,
                                 "n_pax": 170, "engine": "turbofan", "tail": "conventional"})");
  const DesignPoint p = design_from_json(j);
  EXPECT_EQ(p.name, "vtk_E_001");
  EXPECT_EQ(p.values.count("name"), 0u);
  const ParamSpace s = mixed_space();
  EXPECT_NO_THROW(s.validate(p));
  const Json back = s.design_to_json(p);
  EXPECT_EQ(back.at("name"), "vtk_E_001");
  EXPECT_EQ(back.at("altitude"), 30000.0);
  EXPECT_THROW(design_from_json(Json::array()), SpaceError);
}

TEST(Halton, FirstPointsInBaseTwoAndThree) {
  Rng r(1);
  HaltonSequence h(2, r);
  Rng r2(1);
  const double s0 = r2.uniform(), s1 = r2.uniform();
  std::array<double, 2> p{};
  h.point(1, p);
  EXPECT_NEAR(p[0], std::fmod(0.5 + s0, 1.0), 1e-15);
  EXPECT_NEAR(p[1], std::fmod(1.0 / 3.0 + s1, 1.0), 1e-15);
  h.point(3, p);
  EXPECT_NEAR(p[0], std::fmod(0.75 + s0, 1.0), 1e-15);
  EXPECT_NEAR(p[1], std::fmod(1.0 / 9.0 + s1, 1.0), 1e-15);
}

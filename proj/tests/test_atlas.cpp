#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "legcable/atlas.hpp"
#include "legcable/atlas_json.hpp"

using namespace legcable;

namespace {

KnotAtlas te2() { return builtin_atlas(BuiltinKind::TwistEven, 2); }
KnotAtlas k5() { return builtin_atlas(BuiltinKind::KMinus5); }
KnotAtlas unknot() { return builtin_atlas(BuiltinKind::Unknot); }

AtlasSpec unknot_spec() {
  AtlasSpec s;
  s.name = "u";
  s.generators = {{"U", "U", 0, -1}};
  s.rules = {{"U", 1, 0, "generic"}, {"U", 0, 1, "generic"}};
  s.tbb = -1;
  s.width_ceiling = -1;
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Atlas, HandWrittenUnknotIsValid) {
  const KnotAtlas a = make_atlas(unknot_spec());
  EXPECT_EQ(a.generators().size(), 1u);
  EXPECT_EQ(peaks(a), std::vector<int>{0});
}

TEST(Atlas, RuleWithWrongRotationRejected) {
  AtlasSpec s = unknot_spec();
  s.generators.push_back({"V", "V", -1, -2});
  s.rules = {{"U", 1, 0, "V"}};
  EXPECT_EQ(code_of([&] { make_atlas(s); }), ErrorCode::InvariantMismatch);
}

TEST(Atlas, DuplicateAndUnknownIds) {
  AtlasSpec s = unknot_spec();
  s.generators.push_back({"U", "again", 0, -1});
  EXPECT_EQ(code_of([&] { make_atlas(s); }), ErrorCode::DuplicateId);
  s = unknot_spec();
  s.rules.push_back({"X", 1, 0, "generic"});
  EXPECT_EQ(code_of([&] { make_atlas(s); }), ErrorCode::UnknownGenerator);
}

TEST(Atlas, ParityViolation) {
  AtlasSpec s = unknot_spec();
  s.generators[0].tb = -2;
  s.tbb = -2;
  EXPECT_EQ(code_of([&] { make_atlas(s); }), ErrorCode::ParityViolation);
}

TEST(Atlas, BuiltinShapes) {
  const KnotAtlas a = te2();
  EXPECT_EQ(peaks(a).size(), 2u);
  EXPECT_EQ(a.generators().size(), 4u);
  EXPECT_EQ(a.tbb(), 1);
  EXPECT_TRUE(a.uniformly_thick());

  const KnotAtlas t4 = builtin_atlas(BuiltinKind::TwistEven, 4);
  EXPECT_EQ(peaks(t4).size(), 8u);
  EXPECT_EQ(t4.generators().size(), 8u + 4u);

  EXPECT_EQ(peaks(k5()).size(), 2u);
  EXPECT_EQ(peaks(unknot()).size(), 1u);
  EXPECT_FALSE(unknot().uniformly_thick());
}

TEST(Atlas, BuiltinNames) {
  EXPECT_TRUE(is_builtin_name("twist-even-3"));
  EXPECT_TRUE(is_builtin_name("k-minus-5"));
  EXPECT_FALSE(is_builtin_name("twist-even-1"));
  EXPECT_FALSE(is_builtin_name("trefoil"));
  EXPECT_EQ(builtin_atlas("twist-even-2").name(), te2().name());
}

TEST(Atlas, EdgeBasesAreSurgeryDistinct) {
  const KnotAtlas a = te2();
  const int r = a.index_of("R1"), l = a.index_of("L1");
  const int p1 = a.index_of("P1"), p2 = a.index_of("P2");
  EXPECT_EQ(a.surgery_distinct(r, l), Tri::Yes);
  EXPECT_EQ(a.surgery_distinct(p1, p2), Tri::Unknown);
  EXPECT_EQ(a.with_peak_surgery(Tri::Yes).surgery_distinct(p2, p1), Tri::Yes);
}

TEST(Atlas, NormalizeExamples) {
  const KnotAtlas a = te2();
  const int p1 = a.index_of("P1");
  EXPECT_EQ(normalize(a, LegClass::named(p1, 1, 0)), LegClass::named(a.index_of("R1")));
  EXPECT_EQ(normalize(a, LegClass::named(p1, 1, 1)), LegClass::generic_at({0, -1}));
  EXPECT_EQ(normalize(a, LegClass::named(p1)), LegClass::named(p1));
}

TEST(Atlas, StabilizeExamples) {
  const KnotAtlas k = k5();
  EXPECT_EQ(stabilize(k, LegClass::named(k.index_of("A")), Sign::Plus, 1), LegClass::generic_at({1, -4}));
  const KnotAtlas u = unknot();
  EXPECT_EQ(stabilize(u, LegClass::generic_at({0, -1}), Sign::Minus, 2), LegClass::generic_at({-2, -3}));
  const KnotAtlas a = te2();
  const int r1 = a.index_of("R1");
  EXPECT_EQ(stabilize(a, LegClass::named(r1), Sign::Plus, 3), LegClass::named(r1, 3, 0));
}

TEST(Atlas, InvariantsExamples) {
  const KnotAtlas a = te2();
  EXPECT_EQ(invariants(a, LegClass::named(a.index_of("P1"))), (RotTb{0, 1}));
  EXPECT_EQ(invariants(a, LegClass::named(a.index_of("R1"), 2, 0)), (RotTb{3, -2}));
  EXPECT_EQ(invariants(a, LegClass::generic_at({-2, -3})), (RotTb{-2, -3}));
}

TEST(Atlas, EqualityExamples) {
  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A")), b = LegClass::named(k.index_of("B"));
  EXPECT_TRUE(is_equal(k, stabilize(k, a, Sign::Plus), stabilize(k, b, Sign::Plus)));
  EXPECT_FALSE(is_equal(k, a, b));

  const KnotAtlas t = te2();
  const LegClass p1 = LegClass::named(t.index_of("P1"));
  EXPECT_FALSE(is_equal(t, p1, LegClass::named(t.index_of("P2"))));
  EXPECT_TRUE(is_equal(t, stabilize(t, stabilize(t, p1, Sign::Plus), Sign::Minus),
                       stabilize(t, stabilize(t, p1, Sign::Minus), Sign::Plus)));
}

TEST(Atlas, MountainRangeExamples) {
  const MountainRange m = mountain_range(te2(), -1);
  const std::map<RotTb, int> want{{{0, 1}, 2}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}, {{2, -1}, 1}, {{-2, -1}, 1}};
  EXPECT_EQ(m.entries(), want);

  const std::map<RotTb, int> k{{{0, -3}, 2}, {{1, -4}, 1}, {{-1, -4}, 1}};
  EXPECT_EQ(mountain_range(k5(), -4).entries(), k);

  const std::map<RotTb, int> u{{{0, -1}, 1}, {{1, -2}, 1}, {{-1, -2}, 1}, {{0, -3}, 1}, {{2, -3}, 1}, {{-2, -3}, 1}};
  EXPECT_EQ(mountain_range(unknot(), -3).entries(), u);
}

TEST(Atlas, CutoffAbovePeak) {
  EXPECT_EQ(code_of([] { mountain_range(k5(), 0); }), ErrorCode::CutoffAbovePeak);
}

// Normal forms commute with stabilization, keep invariants and are idempotent.
TEST(AtlasProperty, NormalizeStabilizeCommute) {
  std::mt19937 rng(7);
  for (const KnotAtlas& atlas : builtin_atlases()) {
    const int g = static_cast<int>(atlas.generators().size());
    for (int iter = 0; iter < 300; ++iter) {
      const LegClass c = LegClass::named(static_cast<int>(rng() % g), static_cast<int>(rng() % 4),
                                         static_cast<int>(rng() % 4));
      const int da = static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
      const LegClass n = normalize(atlas, c);
      EXPECT_EQ(normalize(atlas, n), n);
      EXPECT_EQ(invariants(atlas, n), invariants(atlas, c));
      const LegClass lhs = stabilize(atlas, n, da, db);
      const LegClass rhs = normalize(atlas, LegClass::named(c.gen, c.a + da, c.b + db));
      EXPECT_EQ(lhs, rhs) << atlas.name() << ' ' << label(atlas, c);
      const RotTb inv = invariants(atlas, c);
      EXPECT_EQ(invariants(atlas, lhs), (RotTb{inv.rot + da - db, inv.tb - da - db}));
      EXPECT_TRUE(is_odd(inv.rot + inv.tb));
    }
  }
}

// Every builtin range is symmetric under rot -> -rot.
TEST(AtlasProperty, RangesAreSymmetric) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    const MountainRange m = mountain_range(atlas, atlas.tbb() - 5);
    for (const auto& [pt, mult] : m.entries()) {
      EXPECT_EQ(m.multiplicity({-pt.rot, pt.tb}), mult) << atlas.name();
    }
  }
}

TEST(AtlasJson, RoundTripIsByteStable) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    const std::string text = dump_atlas(atlas);
    EXPECT_EQ(dump_atlas(parse_atlas(text)), text) << atlas.name();
  }
}

TEST(AtlasJson, LegClassRoundTrip) {
  const KnotAtlas a = te2();
  for (const LegClass& c : enumerate_classes(a, -3)) {
    EXPECT_EQ(leg_class_from_json(a, leg_class_to_json(a, c)), c);
  }
}

TEST(AtlasJson, MalformedInput) {
  EXPECT_EQ(code_of([] { parse_atlas("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_atlas(R"({"name": "x"})"); }), ErrorCode::ParseError);
}

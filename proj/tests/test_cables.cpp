#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "legcable/cables.hpp"

using namespace legcable;

namespace {

KnotAtlas te2() { return builtin_atlas(BuiltinKind::TwistEven, 2); }
KnotAtlas k5() { return builtin_atlas(BuiltinKind::KMinus5); }
KnotAtlas unknot() { return builtin_atlas(BuiltinKind::Unknot); }

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

TEST(Slope, Reduced) {
  EXPECT_EQ(make_slope(2, -3), (Slope{2, -3}));
  EXPECT_EQ(code_of([] { make_slope(2, 4); }), ErrorCode::NotReduced);
  EXPECT_EQ(code_of([] { make_slope(0, 1); }), ErrorCode::NotReduced);
}

TEST(Regime, Examples) {
  EXPECT_EQ(regime(unknot(), 2, 1), Regime::Greater);
  EXPECT_EQ(regime(te2(), 2, -3), Regime::NonIntegerLesser);
  EXPECT_EQ(regime(te2(), 1, 0), Regime::IntegerLesser);
  EXPECT_EQ(regime(unknot(), 2, -3), Regime::UnsupportedWindow);
  for (Regime r : {Regime::Greater, Regime::IntegerLesser, Regime::NonIntegerLesser, Regime::UnsupportedWindow}) {
    EXPECT_EQ(regime_from_string(to_string(r)), r);
  }
}

TEST(GreaterCable, Examples) {
  const KnotAtlas u = unknot();
  const LegClass core = LegClass::named(0);
  EXPECT_EQ(cable_invariants(u, greater_cable(u, core, 2, 3)), (RotTb{0, 1}));
  EXPECT_EQ(cable_invariants(u, greater_cable(u, core, 1, 3)), invariants(u, core));

  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  EXPECT_EQ(cable_invariants(k, greater_cable(k, a, 2, 1)), (RotTb{0, -5}));
  EXPECT_EQ(code_of([&] { greater_cable(te2(), LegClass::named(0), 2, -3); }), ErrorCode::WrongRegime);
}

TEST(GreaterCable, StabilizeExamples) {
  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  const CableClass c = greater_cable(k, a, 2, 1);
  EXPECT_EQ(cable_stabilize(k, c, Sign::Plus, 2), greater_cable(k, stabilize(k, a, Sign::Plus), 2, 1));
  const CableClass once = cable_stabilize(k, c, Sign::Plus, 1);
  EXPECT_EQ(once.i, 1);
  EXPECT_EQ(once.j, 0);
  EXPECT_EQ(cable_invariants(k, once), (RotTb{1, -6}));
  EXPECT_EQ(cable_stabilize(k, c, Sign::Minus, 0), c);
}

TEST(GreaterCable, EqualityExamples) {
  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A")), b = LegClass::named(k.index_of("B"));
  const CableClass ca = greater_cable(k, a, 2, 1), cb = greater_cable(k, b, 2, 1);
  EXPECT_FALSE(cable_equal(k, cable_stabilize(k, ca, 1, 0), cable_stabilize(k, cb, 1, 0)));
  EXPECT_TRUE(cable_equal(k, cable_stabilize(k, ca, 2, 0), cable_stabilize(k, cb, 2, 0)));
  EXPECT_TRUE(cable_equal(k, ca, ca));
  EXPECT_EQ(code_of([&] { cable_equal(k, ca, greater_cable(k, a, 3, 1)); }), ErrorCode::SlopeMismatch);
}

TEST(GreaterCable, MountainRange) {
  const MountainRange m = cable_mountain_range(k5(), 2, 1, -7);
  EXPECT_EQ(m.multiplicity({0, -5}), 2);
  EXPECT_EQ(m.multiplicity({1, -6}), 2);
  EXPECT_EQ(m.multiplicity({-1, -6}), 2);
  EXPECT_EQ(m.multiplicity({0, -7}), 2);
  EXPECT_EQ(m.multiplicity({2, -7}), 1);

  const MountainRange u = cable_mountain_range(unknot(), 2, 3, 1);
  EXPECT_EQ(u.entries(), (std::map<RotTb, int>{{{0, 1}, 1}}));
}

// p stabilizations of one sign move the diamond to the stabilized core.
TEST(GreaterCableProperty, PStabilizationsMatchCore) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    for (int p = 1; p <= 4; ++p) {
      const int q = p * atlas.width_ceiling() + 1;
      if (std::gcd(p, q) != 1 || regime(atlas, p, q) != Regime::Greater) continue;
      for (int g = 0; g < static_cast<int>(atlas.generators().size()); ++g) {
        const LegClass u = LegClass::named(g);
        const CableClass c = greater_cable(atlas, u, p, q);
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const CableClass lhs = cable_stabilize(atlas, c, s, p);
          const CableClass rhs = greater_cable(atlas, stabilize(atlas, u, s), p, q);
          EXPECT_EQ(cable_invariants(atlas, lhs), cable_invariants(atlas, rhs));
          EXPECT_TRUE(cable_equal(atlas, lhs, rhs));
        }
      }
    }
  }
}

TEST(GreaterCableProperty, DiamondHasPSquaredPoints) {
  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  for (int p : {2, 3, 4}) {
    const CableClass c = greater_cable(k, a, p, 1 - 3 * p);
    std::set<RotTb> seen;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        const RotTb inv = cable_invariants(k, cable_stabilize(k, c, i, j));
        EXPECT_TRUE(is_odd(inv.rot + inv.tb));
        seen.insert(inv);
      }
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(p * p));
  }
}

TEST(TwistedCopy, Examples) {
  const KnotAtlas t = te2();
  const LegClass p1 = LegClass::named(t.index_of("P1"));
  const IntegerLinkBase copy = twisted_copy(t, p1, 3, 0);
  EXPECT_EQ(twisted_invariants(t, copy), (std::vector<RotTb>(3, RotTb{0, 1})));
  EXPECT_EQ(twisted_slope(t, copy), 1);

  const IntegerLinkBase once = twisted_copy(t, p1, 2, 1);
  EXPECT_EQ(twisted_invariants(t, once), (std::vector<RotTb>{{0, 1}, {0, -1}}));
  EXPECT_EQ(twisted_slope(t, once), 0);

  const KnotAtlas u = unknot();
  EXPECT_EQ(twisted_invariants(u, twisted_copy(u, LegClass::named(0), 2, 2)), (std::vector<RotTb>{{0, -1}, {0, -5}}));
  EXPECT_EQ(code_of([&] { twisted_copy(u, LegClass::named(0), 2, -1); }), ErrorCode::BadIndex);
}

TEST(LesserCable, Examples) {
  const KnotAtlas t = te2();
  EXPECT_EQ(lesser_invariants(t, lesser_cable(t, LegClass::generic_at({0, -1}), Sign::Plus, 2, -3)), (RotTb{1, -6}));
  const LegClass edge = stabilize(t, LegClass::named(t.index_of("R1")), Sign::Plus);
  EXPECT_EQ(invariants(t, edge), (RotTb{2, -1}));
  EXPECT_EQ(lesser_invariants(t, lesser_cable(t, edge, Sign::Plus, 2, -3)).rot, 5);
  EXPECT_EQ(lesser_invariants(t, lesser_cable(t, edge, Sign::Minus, 2, -3)).rot, 3);
  EXPECT_EQ(code_of([&] { lesser_cable(t, LegClass::named(0), Sign::Plus, 2, -3); }), ErrorCode::WrongWindow);
}

TEST(LesserCable, MountainRangePeakRows) {
  const MountainRange m = lesser_mountain_range(te2(), 2, -3, -6);
  for (int rot : {-5, -3, -1, 1, 3, 5}) EXPECT_EQ(m.multiplicity({rot, -6}), 1) << rot;
  EXPECT_EQ(m.row(-6).size(), 6u);

  const KnotAtlas s = te2().with_peak_surgery(Tri::Yes);
  const MountainRange top = lesser_mountain_range(s, 2, 1, 2);
  EXPECT_EQ(top.tb_max(), 2);
  EXPECT_EQ(top.multiplicity({1, 2}), 2);
  EXPECT_EQ(top.multiplicity({-1, 2}), 2);

  EXPECT_EQ(code_of([] { lesser_mountain_range(unknot(), 2, -3, -10); }), ErrorCode::WrongRegime);
}

// The invariant window and the threshold identity over every window class.
TEST(LesserCableProperty, WindowAndThresholds) {
  const std::vector<std::pair<int, int>> slopes{{2, -3}, {3, -4}, {2, 1}, {3, 2}, {3, -2}, {5, 3}};
  for (const KnotAtlas& atlas : builtin_atlases()) {
    for (const auto& [p, q] : slopes) {
      if (regime(atlas, p, q) != Regime::NonIntegerLesser) continue;
      EXPECT_EQ(theta0(p, q) + theta1(p, q), p);
      for (const LegClass& base : window_classes(atlas, p, q)) {
        const RotTb b = invariants(atlas, base);
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const RotTb c = lesser_invariants(atlas, lesser_cable(atlas, base, s, p, q));
          const int gap = std::abs(c.rot - p * b.rot);
          EXPECT_EQ(gap, p * b.tb - q);
          EXPECT_GT(gap, 0);
          EXPECT_LT(gap, p);
          EXPECT_TRUE(is_odd(c.rot + c.tb));
        }
      }
    }
  }
}

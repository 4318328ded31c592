#include <gtest/gtest.h>

#include "legcable/links.hpp"
#include "legcable/oracle.hpp"

using namespace legcable;

namespace {

KnotAtlas te2() { return builtin_atlas(BuiltinKind::TwistEven, 2); }
KnotAtlas k5() { return builtin_atlas(BuiltinKind::KMinus5); }
KnotAtlas unknot() { return builtin_atlas(BuiltinKind::Unknot); }

// G+ reaches X, but G+- has its own rule, so Named(G,1,1) has two normal forms.
KnotAtlas ambiguous_atlas() {
  AtlasSpec s;
  s.name = "ambiguous";
  s.generators = {{"G", "G", 0, 1}, {"X", "X", 1, 0}};
  s.rules = {{"G", 1, 0, "X"}, {"G", 1, 1, "generic"}};
  s.tbb = 1;
  s.width_ceiling = 1;
  return make_atlas(s);
}

// Replays a witness: each label must be reachable in one move from the last.
void expect_valid_path(const Oracle& o, const OracleState& from, const OracleState& to, const Verdict& v) {
  ASSERT_TRUE(v.is_isotopic());
  ASSERT_FALSE(v.witness.empty());
  EXPECT_EQ(v.witness.front(), o.state_label(from));
  EXPECT_EQ(v.witness.back(), o.state_label(to));
  OracleState cur = from;
  for (std::size_t i = 1; i < v.witness.size(); ++i) {
    bool stepped = false;
    for (const OracleState& nb : o.neighbours(cur)) {
      if (o.state_label(nb) == v.witness[i]) {
        cur = nb;
        stepped = true;
        break;
      }
    }
    ASSERT_TRUE(stepped) << "no move to " << v.witness[i];
  }
  EXPECT_EQ(cur, to);
}

}  // namespace

TEST(Oracle, KnotExamples) {
  const KnotAtlas t = te2();
  const LegClass p1 = LegClass::named(t.index_of("P1"), 1, 1);
  EXPECT_TRUE(closure_equal(t, p1, LegClass::generic_at({0, -1}), {4, 1000}).is_isotopic());
  EXPECT_TRUE(closure_equal(t, p1, p1).is_isotopic());
  EXPECT_TRUE(closure_equal(t, LegClass::named(0), LegClass::named(1)).is_not_isotopic());
}

TEST(Oracle, DiamondsAreDisjoint) {
  const KnotAtlas k = k5();
  const CableClass a = cable_stabilize(k, greater_cable(k, LegClass::named(k.index_of("A")), 2, 1), 1, 0);
  const CableClass b = cable_stabilize(k, greater_cable(k, LegClass::named(k.index_of("B")), 2, 1), 1, 0);
  EXPECT_TRUE(closure_equal(k, a, b, {6, 100000}).is_not_isotopic());
  EXPECT_TRUE(closure_equal(k, a, a).is_isotopic());
}

TEST(Oracle, TinyBudgetIsInconclusive) {
  const KnotAtlas t = te2();
  const Verdict v = closure_equal(t, LegClass::named(0, 3, 3), LegClass::named(1, 0, 0), {1, 3});
  EXPECT_TRUE(v.is_unknown());
}

TEST(Oracle, WitnessReplays) {
  const KnotAtlas t = te2();
  const Oracle o(t);
  const OracleState x = o.state_of(LegClass::named(t.index_of("P1"), 2, 1));
  const OracleState y = o.state_of(LegClass::named(t.index_of("P2"), 2, 1));
  expect_valid_path(o, x, y, o.closure_equal(x, y));

  const Link l1 = make_integer_link(t, LegClass::named(t.index_of("P1")), 2, 1, {{1, 0}, {0, 0}});
  const Link l2 = make_integer_link(t, stabilize(t, LegClass::named(t.index_of("P1")), Sign::Plus), 2, 0,
                                    {{0, 0}, {0, 1}});
  const Oracle lo(t, l1.regime, l1.n, l1.p, l1.q);
  expect_valid_path(lo, lo.state_of(l1), lo.state_of(l2), lo.closure_equal(lo.state_of(l1), lo.state_of(l2)));
}

TEST(Oracle, LinkMismatchThrows) {
  const KnotAtlas t = te2();
  const Link a = make_integer_link(t, LegClass::named(0), 2, 0);
  const Link b = make_integer_link(t, LegClass::named(0), 3, 0);
  EXPECT_THROW(closure_equal(t, a, b), Error);
}

TEST(Oracle, BruteRangesAgreeWithEngine) {
  EXPECT_EQ(brute_mountain_range(te2(), -3), mountain_range(te2(), -3));
  EXPECT_EQ(brute_mountain_range(unknot(), -4), mountain_range(unknot(), -4));
  EXPECT_EQ(brute_cable_mountain_range(k5(), 2, 1, -8), cable_mountain_range(k5(), 2, 1, -8));
  EXPECT_EQ(brute_lesser_mountain_range(te2(), 2, -3, -8), lesser_mountain_range(te2(), 2, -3, -8));
}

TEST(Oracle, BuiltinsAreConfluent) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    const ConfluenceReport r = check_confluence(atlas, 6);
    EXPECT_TRUE(r.ok()) << atlas.name();
    EXPECT_GT(r.checked, 0);
  }
}

TEST(Oracle, DivergenceIsReported) {
  const KnotAtlas a = ambiguous_atlas();
  const ConfluenceReport r = check_confluence(a, 2);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.divergences.front().start, LegClass::named(0, 1, 1));
  EXPECT_EQ(r.divergences.front().normal_forms.size(), 2u);
  const auto j = confluence_report(a, r);
  EXPECT_FALSE(j.dump().empty());
}

TEST(Oracle, ReportShape) {
  const auto j = oracle_report({{"x", Verdict::isotopic("same", {"a", "b"})}});
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["verdict"], "Isotopic");
  EXPECT_EQ(j[0]["path-witness"].size(), 2u);
}

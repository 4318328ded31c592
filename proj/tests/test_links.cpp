#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "legcable/links.hpp"

using namespace legcable;

namespace {

KnotAtlas te2() { return builtin_atlas(BuiltinKind::TwistEven, 2); }
KnotAtlas k5() { return builtin_atlas(BuiltinKind::KMinus5); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

std::vector<RotTb> sorted_invariants(const KnotAtlas& atlas, const Link& l) {
  auto v = component_invariants(atlas, l);
  std::sort(v.begin(), v.end());
  return v;
}

// Links over A and B of K-5 stabilized (m,n) and (k,l).
std::pair<Link, Link> k5_pair(int m, int n, int k, int l) {
  const KnotAtlas a = k5();
  const StabVec v{{m, n}, {k, l}};
  return {make_greater_link(a, LegClass::named(a.index_of("A")), 2, 2, 1, v),
          make_greater_link(a, LegClass::named(a.index_of("B")), 2, 2, 1, v)};
}

}  // namespace

TEST(Links, ConstructionExamples) {
  const KnotAtlas k = k5();
  const Link g = make_greater_link(k, LegClass::named(k.index_of("A")), 2, 2, 1);
  EXPECT_EQ(g.vec, (StabVec{{0, 0}, {0, 0}}));
  EXPECT_EQ(g.regime, Regime::Greater);

  const KnotAtlas t = te2();
  const Link i = make_integer_link(t, LegClass::named(t.index_of("P1")), 2, 1);
  EXPECT_EQ(i.q, 0);
  EXPECT_EQ(component_invariants(t, i), (std::vector<RotTb>{{0, 1}, {0, -1}}));

  const Link l = make_lesser_link(t, LegClass::generic_at({0, -1}), Sign::Plus, 2, 2, -3);
  EXPECT_NO_THROW(validate_link(t, l));
  EXPECT_EQ(code_of([&] { make_greater_link(k, LegClass::named(0), 2, 2, 1, {{0, 0}}); }), ErrorCode::LengthMismatch);
}

TEST(Links, StabilizeComponent) {
  const KnotAtlas t = te2();
  const Link base = make_integer_link(t, LegClass::named(t.index_of("P1")), 2, 0);
  const Link mixed = stabilize_component(t, stabilize_component(t, base, 0, Sign::Plus), 1, Sign::Minus);
  EXPECT_EQ(mixed.vec, (StabVec{{1, 0}, {0, 1}}));
  EXPECT_EQ(stabilize_component(t, base, 1, Sign::Plus, 0), base);
  EXPECT_EQ(code_of([&] { stabilize_component(t, base, 2, Sign::Plus); }), ErrorCode::BadIndex);

  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  Link g = make_greater_link(k, a, 2, 2, 1);
  for (int c = 0; c < 2; ++c) g = stabilize_component(k, g, c, Sign::Plus, 2);
  EXPECT_TRUE(isotopic(k, g, make_greater_link(k, stabilize(k, a, Sign::Plus), 2, 2, 1)).is_isotopic());
}

TEST(Links, CanonicalizeExamples) {
  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  const Link g = make_greater_link(k, a, 2, 2, 1, {{2, 0}, {2, 0}});
  EXPECT_EQ(canonicalize(k, g), make_greater_link(k, stabilize(k, a, Sign::Plus), 2, 2, 1));

  const KnotAtlas t = te2();
  const LegClass w = LegClass::generic_at({0, -1});
  const Link l = make_lesser_link(t, w, Sign::Plus, 2, 2, -3, {{0, 1}, {0, 1}});
  const Link c = canonicalize(t, l);
  EXPECT_EQ(c.form, LinkForm::Ruling);
  EXPECT_EQ(c.base, w);
  EXPECT_EQ(c.vec, (StabVec{{0, 0}, {0, 0}}));
  EXPECT_EQ(canonicalize(t, c), c);
}

TEST(Links, IsotopicExamples) {
  const KnotAtlas k = k5();
  auto [x, y] = k5_pair(2, 0, 2, 0);
  EXPECT_TRUE(isotopic(k, x, y).is_isotopic());
  std::tie(x, y) = k5_pair(1, 2, 2, 0);
  EXPECT_TRUE(isotopic(k, x, y).is_not_isotopic());

  const KnotAtlas t4 = builtin_atlas(BuiltinKind::TwistEven, 4);
  const StabVec v{{1, 0}, {0, 1}};
  const Link p1 = make_integer_link(t4, LegClass::named(t4.index_of("P1")), 2, 0, v);
  const Link p3 = make_integer_link(t4, LegClass::named(t4.index_of("P3")), 2, 0, v);
  EXPECT_TRUE(isotopic(t4, p1, p3).is_not_isotopic());
  EXPECT_TRUE(componentwise_isotopic(t4, p1, p3));
  EXPECT_TRUE(componentwise_isotopic(t4, p1, p1));

  EXPECT_EQ(code_of([&] { isotopic(t4, p1, make_greater_link(k, LegClass::named(0), 2, 2, 1)); }),
            ErrorCode::RegimeMismatch);
}

TEST(Links, ComponentwiseNeedsEqualInvariants) {
  const KnotAtlas t = te2();
  const LegClass p1 = LegClass::named(t.index_of("P1"));
  EXPECT_FALSE(componentwise_isotopic(t, make_integer_link(t, p1, 2, 0, {{1, 0}, {0, 0}}),
                                      make_integer_link(t, p1, 2, 0, {{0, 1}, {0, 0}})));
}

TEST(Links, ComponentClassExamples) {
  const KnotAtlas t = te2();
  const Link once = make_integer_link(t, LegClass::named(t.index_of("P1")), 2, 1);
  EXPECT_EQ(std::get<LegClass>(component_class(t, once, 1)), LegClass::generic_at({0, -1}));
  EXPECT_EQ(std::get<LegClass>(component_class(t, once, 0)), LegClass::named(t.index_of("P1")));

  const KnotAtlas k = k5();
  const LegClass a = LegClass::named(k.index_of("A"));
  const Link g = make_greater_link(k, a, 2, 2, 1, {{1, 0}, {0, 0}});
  const CableClass c = std::get<CableClass>(component_class(k, g, 0));
  EXPECT_EQ(cable_invariants(k, c), (RotTb{1, -6}));
  EXPECT_TRUE(cable_equal(k, c, cable_stabilize(k, greater_cable(k, a, 2, 1), Sign::Plus)));
}

TEST(Links, PermutationExamples) {
  const KnotAtlas k = k5();
  const Link g = make_greater_link(k, LegClass::named(k.index_of("A")), 2, 2, 1);
  EXPECT_TRUE(permutation_realizable(k, g, {1, 0}).is_isotopic());

  const KnotAtlas t = te2();
  const Link peak = make_integer_link(t, LegClass::named(t.index_of("P1")), 2, 0);
  EXPECT_TRUE(permutation_realizable(t, peak, {1, 0}).is_not_isotopic());

  const Link edge = make_integer_link(t, LegClass::named(t.index_of("R1")), 3, 0);
  EXPECT_EQ(edge.q, 0);
  EXPECT_TRUE(permutation_realizable(t, edge, {1, 2, 0}).is_isotopic());
  EXPECT_TRUE(permutation_realizable(t, edge, {1, 0, 2}).is_not_isotopic());
  EXPECT_TRUE(permutation_realizable(t, edge, {0, 1, 2}).is_isotopic());
  EXPECT_EQ(code_of([&] { permutation_realizable(t, edge, {0, 0, 1}); }), ErrorCode::NotAPermutation);
}

TEST(Links, EnumerateExamples) {
  const KnotAtlas t = te2();
  const auto ints = enumerate_nondestab_links(t, 2, 1, 0);
  ASSERT_EQ(ints.size(), 4u);
  std::vector<std::string> labels;
  for (const Link& l : ints) labels.push_back(link_label(t, l));
  EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()).size(), 4u);

  EXPECT_EQ(enumerate_nondestab_links(k5(), 2, 2, 1).size(), 2u);
  EXPECT_EQ(enumerate_nondestab_links(t, 1, 2, -3).size(), 6u);
}

// Peak links have a single knot class on every component.
TEST(LinksProperty, PeakLinkComponentsAgree) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, atlas.tbb() * 2 + 1}, {1, atlas.tbb()}}) {
      for (const Link& l : enumerate_nondestab_links(atlas, 3, p, q)) {
        const auto inv = component_invariants(atlas, l);
        if (std::adjacent_find(inv.begin(), inv.end(), std::not_equal_to<>()) != inv.end()) continue;
        for (int c = 1; c < l.n; ++c) {
          EXPECT_TRUE(components_isotopic(atlas, component_class(atlas, l, 0), component_class(atlas, l, c))
                          .is_isotopic())
              << link_label(atlas, l);
        }
      }
    }
  }
}

// S_{1,+} T^t(nL) = S_{2,-}..S_{n,-} T^{t-1}(n S_+L) and the mirror statement.
TEST(LinksProperty, StabilizationRelation) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    for (const LegClass& l : enumerate_classes(atlas, atlas.tbb() - 2)) {
      for (int n = 1; n <= 3; ++n) {
        for (int t = 1; t <= 3; ++t) {
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            StabVec lhs(n), rhs(n);
            (s == Sign::Plus ? lhs[0].a : lhs[0].b) = 1;
            for (int c = 1; c < n; ++c) (s == Sign::Plus ? rhs[c].b : rhs[c].a) = 1;
            const Link x = make_integer_link(atlas, l, n, t, lhs);
            const Link y = make_integer_link(atlas, stabilize(atlas, l, s), n, t - 1, rhs);
            EXPECT_TRUE(isotopic(atlas, x, y).is_isotopic()) << link_label(atlas, x) << " vs " << link_label(atlas, y);
          }
        }
      }
    }
  }
}

// On a random sample of integer and greater links: equivalence and the
// chain isotopic => componentwise => equal invariants.
TEST(LinksProperty, SampledEquivalence) {
  std::mt19937 rng(11);
  auto draw = [&](const KnotAtlas& atlas, bool integer) {
    auto classes = classes_at(atlas, atlas.tbb());
    if (integer) {
      const auto lower = classes_at(atlas, atlas.tbb() - 1);
      classes.insert(classes.end(), lower.begin(), lower.end());
    }
    const LegClass l = classes[rng() % classes.size()];
    StabVec v(2);
    for (auto& sp : v) sp = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    return integer ? make_integer_link(atlas, l, 2, invariants(atlas, l).tb - atlas.tbb() + 1, v)
                   : make_greater_link(atlas, l, 2, 2, 2 * atlas.width_ceiling() + 1, v);
  };
  for (const KnotAtlas& atlas : builtin_atlases()) {
    for (bool integer : {true, false}) {
      std::vector<Link> pool;
      for (int i = 0; i < 30; ++i) pool.push_back(draw(atlas, integer));
      for (const Link& x : pool) {
        EXPECT_TRUE(isotopic(atlas, x, x).is_isotopic());
        for (const Link& y : pool) {
          const Verdict xy = isotopic(atlas, x, y);
          if (xy.is_unknown()) continue;
          EXPECT_EQ(xy.kind, isotopic(atlas, y, x).kind);
          if (xy.is_isotopic()) {
            EXPECT_TRUE(componentwise_isotopic(atlas, x, y));
            for (const Link& z : pool) {
              const Verdict yz = isotopic(atlas, y, z);
              if (yz.is_isotopic()) EXPECT_FALSE(isotopic(atlas, x, z).is_not_isotopic());
            }
          }
          if (componentwise_isotopic(atlas, x, y)) {
            EXPECT_EQ(sorted_invariants(atlas, x), sorted_invariants(atlas, y));
          }
        }
      }
    }
  }
}

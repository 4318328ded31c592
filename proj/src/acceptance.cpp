#include "legcable/acceptance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "legcable/atlas.hpp"
#include "legcable/cables.hpp"
#include "legcable/links.hpp"
#include "legcable/oracle.hpp"

namespace legcable {

namespace {

using Mult = std::map<RotTb, int>;

std::string show(RotTb p) { return "(" + std::to_string(p.rot) + "," + std::to_string(p.tb) + ")"; }

// First point where two multiplicity tables differ, or empty.
std::string first_difference(const Mult& got, const Mult& want) {
  std::set<RotTb> keys;
  for (const auto& [k, v] : got) keys.insert(k);
  for (const auto& [k, v] : want) keys.insert(k);
  for (const auto& k : keys) {
    const int g = got.count(k) ? got.at(k) : 0;
    const int w = want.count(k) ? want.at(k) : 0;
    if (g != w) return show(k) + " got " + std::to_string(g) + " want " + std::to_string(w);
  }
  return {};
}

bool all_odd(const Mult& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& e) { return is_odd(e.first.rot + e.first.tb); });
}

// ---------------------------------------------------------------------------

CriterionResult twist_ranges() {
  CriterionResult r{1, "twist knot mountain ranges", true, ""};
  for (int n : {2, 3, 4}) {
    const KnotAtlas atlas = builtin_atlas(BuiltinKind::TwistEven, n);
    const int l = (n * n + 1) / 2;
    const int k = (n + 1) / 2;
    Mult want{{{0, 1}, l}};
    for (int t = 0; t >= -3; --t) {
      for (int rot = t - 1; rot <= 1 - t; rot += 2) want[{rot, t}] = (rot == t - 1 || rot == 1 - t) ? k : 1;
    }
    const std::string diff = first_difference(mountain_range(atlas, -3).entries(), want);
    if (!diff.empty()) {
      r.pass = false;
      r.detail += "n=" + std::to_string(n) + ": " + diff + "; ";
    }
  }
  if (r.pass) r.detail = "n=2,3,4 exact down to tb=-3";
  return r;
}

CriterionResult kminus5_cable() {
  CriterionResult r{2, "K-5 (2,1) cable mountain range", true, ""};
  const KnotAtlas atlas = builtin_atlas(BuiltinKind::KMinus5);
  const Mult got = cable_mountain_range(atlas, 2, 1, -7).entries();
  const Mult want{{{0, -5}, 2}, {{1, -6}, 2}, {{-1, -6}, 2}, {{0, -7}, 2}, {{2, -7}, 1}, {{-2, -7}, 1}};
  r.detail = first_difference(got, want);
  r.pass = r.detail.empty();
  if (r.pass) r.detail = "peak (0,-5):2, (+-1,-6):2, (0,-7):2";
  return r;
}

CriterionResult kminus5_table() {
  CriterionResult r{3, "K-5 2-component (4,2) link table", true, ""};
  const KnotAtlas atlas = builtin_atlas(BuiltinKind::KMinus5);
  const LegClass a = LegClass::named(atlas.index_of("A"));
  const LegClass b = LegClass::named(atlas.index_of("B"));
  int cells = 0, iso = 0, oracle_checked = 0, problems = 0;
  std::ostringstream bad;
  for (int m = 0; m <= 3; ++m) {
    for (int nn = 0; nn <= 3; ++nn) {
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          ++cells;
          const StabVec v{{m, nn}, {k, l}};
          const Link l1 = make_greater_link(atlas, a, 2, 2, 1, v);
          const Link l2 = make_greater_link(atlas, b, 2, 2, 1, v);
          const Verdict got = isotopic(atlas, l1, l2);
          const bool want_iso = (m >= 2 && k >= 2) || (nn >= 2 && l >= 2);
          // a component of A's diamond meets B's only after pushing into u
          const bool want_cw = (m >= 2 || nn >= 2) && (k >= 2 || l >= 2);
          const Verdict oracle = closure_equal(atlas, l1, l2);
          if (!oracle.is_unknown()) ++oracle_checked;
          const bool ok = got.is_isotopic() == want_iso && !got.is_unknown() &&
                          componentwise_isotopic(atlas, l1, l2) == want_cw &&
                          (oracle.is_unknown() || oracle.kind == got.kind);
          if (got.is_isotopic()) ++iso;
          if (!ok) {
            ++problems;
            if (problems <= 3) bad << "(" << m << nn << k << l << ") ";
          }
        }
      }
    }
  }
  r.pass = problems == 0;
  r.detail = std::to_string(cells) + " cells, " + std::to_string(iso) + " isotopic, oracle conclusive on " +
             std::to_string(oracle_checked);
  if (!r.pass) r.detail += ", mismatches " + std::to_string(problems) + ": " + bad.str();
  return r;
}

CriterionResult newpenom() {
  CriterionResult r{4, "component-wise isotopic but not isotopic (TwistEven(4))", false, "no witness pair"};
  const KnotAtlas atlas = builtin_atlas(BuiltinKind::TwistEven, 4);
  const auto ps = peaks(atlas);
  for (std::size_t i = 0; i < ps.size() && !r.pass; ++i) {
    for (std::size_t j = i + 1; j < ps.size() && !r.pass; ++j) {
      const LegClass pi = LegClass::named(ps[i]);
      const LegClass pj = LegClass::named(ps[j]);
      if (stabilize(atlas, pi, Sign::Plus) != stabilize(atlas, pj, Sign::Plus) ||
          stabilize(atlas, pi, Sign::Minus) != stabilize(atlas, pj, Sign::Minus)) {
        continue;
      }
      const StabVec v{{1, 0}, {0, 1}};
      const Link li = make_integer_link(atlas, pi, 2, 0, v);
      const Link lj = make_integer_link(atlas, pj, 2, 0, v);
      const Verdict got = isotopic(atlas, li, lj);
      const Verdict oracle = closure_equal(atlas, li, lj);
      if (got.is_not_isotopic() && componentwise_isotopic(atlas, li, lj) && !oracle.is_isotopic()) {
        r.pass = true;
        r.detail = "S_{1,+}S_{2,-}(2" + atlas.generator(ps[i]).name + ") vs S_{1,+}S_{2,-}(2" +
                   atlas.generator(ps[j]).name + "): " + to_string(got.kind) + ", oracle " + to_string(oracle.kind);
      }
    }
  }
  return r;
}

CriterionResult census() {
  CriterionResult r{5, "lesser cable census at tb=-pq", true, ""};
  struct Case {
    int n, p, q, m;
  };
  for (const Case c : {Case{2, 2, 3, 1}, Case{3, 2, 3, 1}, Case{2, 3, 4, 1}, Case{2, 2, 5, 2}}) {
    const KnotAtlas atlas = builtin_atlas(BuiltinKind::TwistEven, c.n);
    const int k = (c.n + 1) / 2;
    const int top = -c.p * c.q;
    Mult want;
    for (int l = 0; l < c.m; ++l) {
      want[{c.p - c.q + 2 * c.p * l, top}] += 1;
      want[{-(c.p - c.q + 2 * c.p * l), top}] += 1;
    }
    for (int rot : {c.p + c.q, -(c.p + c.q), (2 * c.m + 1) * c.p - c.q, -((2 * c.m + 1) * c.p - c.q)}) {
      want[{rot, top}] += k;
    }
    const MountainRange mr = lesser_mountain_range(atlas, c.p, -c.q, top);
    int total = 0;
    for (const auto& [pt, mult] : mr.entries()) total += mult;
    std::string diff = first_difference(mr.entries(), want);
    if (diff.empty() && total != 2 * c.m + 4 * k) diff = "total " + std::to_string(total);
    r.detail += "(" + std::to_string(c.n) + "," + std::to_string(c.p) + "," + std::to_string(c.q) + "," +
                std::to_string(c.m) + "): " + (diff.empty() ? std::to_string(total) + " classes" : diff) + "; ";
    r.pass = r.pass && diff.empty();
  }
  return r;
}

CriterionResult ifsurg() {
  CriterionResult r{6, "surgery-distinct peaks over TwistEven(2), slope (2,1)", true, ""};
  const int p = 2, q = 1;
  const KnotAtlas atlas = builtin_atlas(BuiltinKind::TwistEven, 2).with_peak_surgery(Tri::Yes);
  const auto ps = peaks(atlas);
  const int l = static_cast<int>(ps.size());
  const int k = 1;
  const Mult want{{{p - q, p * q}, l}, {{q - p, p * q}, l}};
  const std::string diff = first_difference(lesser_mountain_range(atlas, p, q, p * q).entries(), want);
  if (!diff.empty()) {
    r.pass = false;
    r.detail += "peak row " + diff + "; ";
  }
  // the 2l peak cables are pairwise distinct
  std::vector<Link> tops;
  for (int g : ps) {
    for (Sign s : {Sign::Plus, Sign::Minus}) tops.push_back(make_lesser_link(atlas, LegClass::named(g), s, 1, p, q));
  }
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      if (!isotopic(atlas, tops[i], tops[j]).is_not_isotopic()) {
        r.pass = false;
        r.detail += "peak cables " + std::to_string(i) + "," + std::to_string(j) + " not separated; ";
      }
    }
  }
  std::set<LinkKey> plus_family;
  for (int g : ps) {
    const Link lp = make_lesser_link(atlas, LegClass::named(g), Sign::Plus, 1, p, q);
    const Link lm = make_lesser_link(atlas, LegClass::named(g), Sign::Minus, 1, p, q);
    const Link down_p = stabilize_component(atlas, lp, 0, Sign::Minus, p - q);
    const Link down_m = stabilize_component(atlas, lm, 0, Sign::Plus, p - q);
    if (!isotopic(atlas, down_p, down_m).is_isotopic()) {
      r.pass = false;
      r.detail += "S_-^{p-q}(L+) != S_+^{p-q}(L-) for " + atlas.generator(g).name + "; ";
    }
    plus_family.insert(canonical_key(atlas, stabilize_component(atlas, lp, 0, Sign::Plus, q)));
  }
  if (static_cast<int>(plus_family.size()) != k) {
    r.pass = false;
    r.detail += "S_+^q family has " + std::to_string(plus_family.size()) + " classes; ";
  }
  if (r.pass) r.detail = std::to_string(2 * l) + " classes at tb=2, merge identity holds, S_+^q family collapses to 1";
  return r;
}

CriterionResult stabrelation() {
  CriterionResult r{7, "twisted-copy stabilization identities", true, ""};
  int checked = 0, failed = 0;
  for (const auto& atlas : builtin_atlases()) {
    for (const auto& lc : enumerate_classes(atlas, atlas.tbb() - 2)) {
      for (int n : {2, 3}) {
        for (int t : {1, 2, 3}) {
          const Link base = make_integer_link(atlas, lc, n, t);
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            const Link lhs = stabilize_component(atlas, base, 0, s, 1);
            Link rhs = make_integer_link(atlas, stabilize(atlas, lc, s, 1), n, t - 1);
            for (int c = 1; c < n; ++c) rhs = stabilize_component(atlas, rhs, c, opposite(s), 1);
            ++checked;
            if (!isotopic(atlas, lhs, rhs).is_isotopic() || !closure_equal(atlas, lhs, rhs).is_isotopic()) {
              ++failed;
              if (failed <= 3) r.detail += atlas.name() + " " + link_label(atlas, base) + " " + to_string(s) + "; ";
            }
          }
        }
      }
    }
  }
  r.pass = failed == 0;
  r.detail = std::to_string(checked) + " identities, " + std::to_string(failed) + " failed" +
             (r.detail.empty() ? "" : ": " + r.detail);
  return r;
}

}  // namespace

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick_from(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(v.size()) - 1))];
}

StabVec random_vec(Rng& rng, int n, int depth) {
  StabVec v;
  for (int c = 0; c < n; ++c) {
    const int a = pick(rng, 0, depth);
    v.push_back({a, pick(rng, 0, depth - a)});
  }
  return v;
}

int first_coprime_above(int p, int floor_q) {
  int q = floor_q + 1;
  while (std::gcd(p, q) != 1) ++q;
  return q;
}

Link from_state(const Link& shape, const OracleState& s, Rng& rng) {
  Link l = shape;
  switch (s.kind) {
    case OracleState::Cable: l.form = LinkForm::Cable; break;
    case OracleState::Twisted: l.form = LinkForm::Twisted; break;
    case OracleState::Ruling: l.form = LinkForm::Ruling; break;
    case OracleState::TorusDivide: l.form = LinkForm::TorusDivide; break;
    case OracleState::Knot: break;
  }
  l.base = s.u;
  l.t = s.t;
  l.sign = s.sign;
  l.vec = s.vec;
  const bool keep_first = l.form == LinkForm::Twisted && l.t > 0;
  std::shuffle(l.vec.begin() + (keep_first ? 1 : 0), l.vec.end(), rng);
  return l;
}

// Second link of a pair: an oracle-orbit sample, a same-invariant sibling, or
// an independent draw from `fresh`.
template <typename Fresh>
Link partner(const KnotAtlas& atlas, const Link& l1, Rng& rng, Fresh&& fresh) {
  switch (pick(rng, 0, 2)) {
    case 0: {
      Oracle o(atlas, l1.regime, l1.n, l1.p, l1.q);
      const OrbitResult orb = o.orbit(o.state_of(l1));
      return from_state(l1, pick_from(rng, orb.states), rng);
    }
    case 1: {
      Link l2 = l1;
      const RotTb inv = invariants(atlas, l1.base);
      std::vector<LegClass> same;
      for (const auto& c : classes_at(atlas, inv.tb)) {
        if (invariants(atlas, c).rot == inv.rot) same.push_back(c);
      }
      if (!same.empty()) l2.base = pick_from(rng, same);
      const bool keep_first = l2.form == LinkForm::Twisted && l2.t > 0;
      std::shuffle(l2.vec.begin() + (keep_first ? 1 : 0), l2.vec.end(), rng);
      return l2;
    }
    default:
      return fresh();
  }
}

struct Tally {
  int instances = 0;
  int conclusive = 0;
  int disagreements = 0;
  int abstentions = 0;
  int isotopic = 0;
  std::string first_bad;
};

void compare(const KnotAtlas& atlas, const Link& l1, const Link& l2, Tally& t) {
  ++t.instances;
  const Verdict got = isotopic(atlas, l1, l2);
  const Verdict truth = closure_equal(atlas, l1, l2);
  if (got.is_isotopic()) ++t.isotopic;
  if (got.is_unknown()) ++t.abstentions;
  if (truth.is_unknown()) return;
  ++t.conclusive;
  if (!got.is_unknown() && got.kind != truth.kind) {
    if (t.disagreements == 0) {
      t.first_bad = atlas.name() + " " + link_label(atlas, l1) + " vs " + link_label(atlas, l2) + ": " +
                    to_string(got.kind) + " / oracle " + to_string(truth.kind);
    }
    ++t.disagreements;
  }
}

constexpr int kInstancesPerRegime = 600;
constexpr int kDepth = 6;

Tally greater_sample(Rng& rng) {
  Tally t;
  const auto atlases = builtin_atlases();
  while (t.instances < kInstancesPerRegime) {
    const KnotAtlas& atlas = pick_from(rng, atlases);
    const int p = pick(rng, 1, 3);
    int q = first_coprime_above(p, p * atlas.width_ceiling());
    for (int extra = pick(rng, 0, 2); extra > 0; --extra) q = first_coprime_above(p, q);
    const int n = pick(rng, 1, 3);
    auto fresh = [&] {
      const auto classes = enumerate_classes(atlas, atlas.tbb() - 2);
      return make_greater_link(atlas, pick_from(rng, classes), n, p, q, random_vec(rng, n, kDepth));
    };
    const Link l1 = fresh();
    compare(atlas, l1, partner(atlas, l1, rng, fresh), t);
  }
  return t;
}

Tally integer_sample(Rng& rng) {
  Tally t;
  const auto atlases = builtin_atlases();
  while (t.instances < kInstancesPerRegime) {
    const KnotAtlas& atlas = pick_from(rng, atlases);
    const int q = atlas.tbb() - pick(rng, 0, 3);
    const int n = pick(rng, 1, 3);
    auto fresh = [&] {
      if (pick(rng, 0, 4) == 0) {
        const auto below = classes_at(atlas, q - pick(rng, 1, 3));
        return make_integer_ruling(atlas, pick_from(rng, below), n, q, random_vec(rng, n, kDepth));
      }
      const auto above = enumerate_classes(atlas, q);
      const LegClass l = pick_from(rng, above);
      return make_integer_link(atlas, l, n, invariants(atlas, l).tb - q, random_vec(rng, n, kDepth));
    };
    const Link l1 = fresh();
    compare(atlas, l1, partner(atlas, l1, rng, fresh), t);
  }
  return t;
}

Tally lesser_sample(Rng& rng) {
  struct Config {
    KnotAtlas atlas;
    int p, q;
  };
  const KnotAtlas te2 = builtin_atlas(BuiltinKind::TwistEven, 2);
  const KnotAtlas te2s = te2.with_peak_surgery(Tri::Yes);
  const KnotAtlas te3s = builtin_atlas(BuiltinKind::TwistEven, 3).with_peak_surgery(Tri::Yes);
  const KnotAtlas k5s = builtin_atlas(BuiltinKind::KMinus5).with_peak_surgery(Tri::Yes);
  const std::vector<Config> configs{{te2, 2, -3},  {te2, 3, -4},  {te2, 2, -5}, {te2, 3, -2},
                                    {te2s, 2, 1},  {te2s, 3, 1},  {te2s, 3, 2}, {te3s, 2, 1},
                                    {te3s, 2, -3}, {te3s, 3, 1},  {k5s, 2, -7}};
  Tally t;
  while (t.instances < kInstancesPerRegime) {
    const Config& cfg = pick_from(rng, configs);
    const KnotAtlas& atlas = cfg.atlas;
    const int n = pick(rng, 1, 3);
    const int c = window_tb(cfg.p, cfg.q);
    auto fresh = [&] {
      if (pick(rng, 0, 4) == 0) {
        const auto below = classes_at(atlas, c - pick(rng, 0, 2));
        return make_lesser_ruling(atlas, pick_from(rng, below), n, cfg.p, cfg.q, random_vec(rng, n, kDepth));
      }
      const auto window = window_classes(atlas, cfg.p, cfg.q);
      const Sign s = pick(rng, 0, 1) ? Sign::Plus : Sign::Minus;
      return make_lesser_link(atlas, pick_from(rng, window), s, n, cfg.p, cfg.q, random_vec(rng, n, kDepth));
    };
    const Link l1 = fresh();
    compare(atlas, l1, partner(atlas, l1, rng, fresh), t);
  }
  return t;
}

CriterionResult oracle_agreement(std::uint64_t seed) {
  CriterionResult r{8, "decider agrees with the rewrite-closure oracle", true, ""};
  Rng rng(seed);
  const std::pair<const char*, Tally> runs[] = {
      {"greater", greater_sample(rng)}, {"integer", integer_sample(rng)}, {"lesser", lesser_sample(rng)}};
  for (const auto& [name, t] : runs) {
    r.detail += std::string(name) + ": " + std::to_string(t.instances) + " pairs, " + std::to_string(t.isotopic) +
                " isotopic, oracle conclusive " + std::to_string(t.conclusive) + ", disagreements " +
                std::to_string(t.disagreements) + ", abstentions " + std::to_string(t.abstentions) + "; ";
    if (t.disagreements > 0 || t.abstentions > 0 || t.conclusive < kInstancesPerRegime * 9 / 10) r.pass = false;
    if (!t.first_bad.empty()) r.detail += "first: " + t.first_bad + "; ";
  }
  return r;
}

CriterionResult structural() {
  CriterionResult r{9, "diamond relation, parity, equal components of peak links", true, ""};
  int diamonds = 0, parity_points = 0, peak_links = 0;
  auto fail = [&](const std::string& why) {
    if (r.pass) r.detail = why;
    r.pass = false;
  };
  for (const auto& atlas : builtin_atlases()) {
    for (int g = 0; g < static_cast<int>(atlas.generators().size()); ++g) {
      const LegClass u = LegClass::named(g);
      for (int p = 1; p <= 4; ++p) {
        const int q = first_coprime_above(p, p * atlas.width_ceiling());
        const CableClass top = greater_cable(atlas, u, p, q);
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          ++diamonds;
          const CableClass lhs = cable_stabilize(atlas, top, s, p);
          const CableClass rhs = greater_cable(atlas, stabilize(atlas, u, s, 1), p, q);
          if (!cable_equal(atlas, lhs, rhs) || cable_invariants(atlas, lhs) != cable_invariants(atlas, rhs) ||
              !closure_equal(atlas, lhs, rhs).is_isotopic()) {
            fail("diamond relation fails on " + atlas.name() + " " + atlas.generator(g).name);
          }
        }
      }
    }

    std::vector<Mult> ranges{mountain_range(atlas, atlas.tbb() - 4).entries()};
    const int gq = first_coprime_above(2, 2 * atlas.width_ceiling());
    ranges.push_back(cable_mountain_range(atlas, 2, gq, 2 * gq - gq + 2 * atlas.tbb() - 4).entries());
    std::vector<std::pair<int, int>> slopes{{2, gq}, {1, atlas.tbb()}, {1, atlas.tbb() - 1}};
    if (atlas.uniformly_thick()) {
      const int lq = 2 * atlas.tbb() - 1;
      slopes.emplace_back(2, lq);
      ranges.push_back(lesser_mountain_range(atlas, 2, lq, 2 * lq - 4).entries());
    }
    for (const auto& m : ranges) {
      parity_points += static_cast<int>(m.size());
      if (!all_odd(m)) fail("even rot+tb in a mountain range of " + atlas.name());
    }
    for (const auto& [p, q] : slopes) {
      for (const Link& l : enumerate_nondestab_links(atlas, 3, p, q)) {
        const auto inv = component_invariants(atlas, l);
        for (int c = 0; c < 3; ++c) {
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            for (const RotTb& x : component_invariants(atlas, stabilize_component(atlas, l, c, s, 2))) {
              ++parity_points;
              if (!is_odd(x.rot + x.tb)) fail("even rot+tb after stabilizing " + link_label(atlas, l));
            }
          }
        }
        if (!std::all_of(inv.begin(), inv.end(), [&](const RotTb& x) { return x.tb == inv[0].tb; })) continue;
        ++peak_links;
        const ComponentClass first = component_class(atlas, l, 0);
        for (int c = 1; c < 3; ++c) {
          if (!components_isotopic(atlas, first, component_class(atlas, l, c)).is_isotopic()) {
            fail("components differ in " + link_label(atlas, l));
          }
        }
      }
    }
  }
  if (r.pass) {
    r.detail = std::to_string(diamonds) + " diamond relations, " + std::to_string(parity_points) +
               " parity checks, " + std::to_string(peak_links) + " peak links";
  }
  return r;
}

CriterionResult confluence() {
  CriterionResult r{10, "rewrite confluence of builtin atlases to depth 8", true, ""};
  int checked = 0;
  for (const auto& atlas : builtin_atlases()) {
    const ConfluenceReport rep = check_confluence(atlas, 8);
    checked += rep.checked;
    if (!rep.ok()) {
      r.pass = false;
      r.detail += atlas.name() + ": " + std::to_string(rep.divergences.size()) + " divergences; ";
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " start classes, no divergence";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  try {
    switch (id) {
      case 1: return twist_ranges();
      case 2: return kminus5_cable();
      case 3: return kminus5_table();
      case 4: return newpenom();
      case 5: return census();
      case 6: return ifsurg();
      case 7: return stabrelation();
      case 8: return oracle_agreement(seed);
      case 9: return structural();
      case 10: return confluence();
      default: break;
    }
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  return {id, "criterion " + std::to_string(id), false, "no such criterion"};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace legcable

#include "legcable/links.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace legcable {

const char* to_string(LinkForm f) {
  switch (f) {
    case LinkForm::Cable: return "cable";
    case LinkForm::Twisted: return "twisted";
    case LinkForm::Ruling: return "ruling";
    case LinkForm::TorusDivide: return "torus-divide";
  }
  return "cable";
}

LinkForm link_form_from_string(const std::string& s) {
  for (LinkForm f : {LinkForm::Cable, LinkForm::Twisted, LinkForm::Ruling, LinkForm::TorusDivide}) {
    if (s == to_string(f)) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown link form '" + s + "'");
}

namespace {

StabVec fill_vec(StabVec vec, int n) {
  if (n < 1) throw Error(ErrorCode::LengthMismatch, "a link needs n >= 1 components");
  if (vec.empty()) vec.assign(static_cast<std::size_t>(n), StabPair{});
  return vec;
}

int min_a(const StabVec& v) {
  int m = v.front().a;
  for (const auto& s : v) m = std::min(m, s.a);
  return m;
}

int min_b(const StabVec& v) {
  int m = v.front().b;
  for (const auto& s : v) m = std::min(m, s.b);
  return m;
}

void shift_all(StabVec& v, int da, int db) {
  for (auto& s : v) {
    s.a += da;
    s.b += db;
  }
}

std::string pair_text(const StabPair& s) { return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")"; }

// Greater-like reduction: while every a_c >= step, push one + stabilization
// into the base (likewise for b).
void push_ruling(const KnotAtlas& atlas, Link& l, int step) {
  const int ka = min_a(l.vec) / step;
  const int kb = min_b(l.vec) / step;
  if (ka == 0 && kb == 0) return;
  l.base = stabilize(atlas, l.base, ka, kb);
  shift_all(l.vec, -ka * step, -kb * step);
}

Link canonical_greater(const KnotAtlas& atlas, Link l) {
  l.base = normalize(atlas, l.base);
  push_ruling(atlas, l, l.p);
  return l;
}

// n-copy (t = 0): descends to a ruling link over a stabilization of the base
// once every component carries a stabilization of one sign.
bool copy_descends(const Link& l) { return min_a(l.vec) >= 1 || min_b(l.vec) >= 1; }

Link canonical_integer(const KnotAtlas& atlas, Link l) {
  l.base = normalize(atlas, l.base);
  if (l.form == LinkForm::Ruling) {
    push_ruling(atlas, l, 1);
    return l;
  }
  const int a1 = l.vec[0].a;
  const int b1 = l.vec[0].b;
  auto rest_shift = [&](Link& x, int da, int db) {
    for (std::size_t c = 1; c < x.vec.size(); ++c) {
      x.vec[c].a += da;
      x.vec[c].b += db;
    }
  };
  if (a1 + b1 < l.t) {
    // move every stabilization of component 1 into the base
    l.base = stabilize(atlas, l.base, a1, b1);
    l.t -= a1 + b1;
    l.vec[0] = {};
    rest_shift(l, b1, a1);
    return l;
  }
  const int lo = std::max(0, l.t - b1);
  const int hi = std::min(a1, l.t);
  Link chosen;
  bool found = false;
  for (int x = lo; x <= hi; ++x) {
    Link c = l;
    c.base = stabilize(atlas, l.base, x, l.t - x);
    c.t = 0;
    c.vec[0] = {a1 - x, b1 - (l.t - x)};
    rest_shift(c, l.t - x, x);
    if (copy_descends(c) || x == hi) {
      chosen = c;
      found = copy_descends(c);
      if (found) break;
    }
  }
  if (found) {
    chosen.form = LinkForm::Ruling;
    push_ruling(atlas, chosen, 1);
  }
  return chosen;
}

Link canonical_lesser(const KnotAtlas& atlas, Link l) {
  l.base = normalize(atlas, l.base);
  const int c = window_tb(l.p, l.q);
  const int th0 = theta0(l.p, l.q);
  const int th1 = theta1(l.p, l.q);
  if (l.form == LinkForm::TorusDivide) {
    // same-sign threshold th1 drops to S_sign(base), opposite-sign th0 keeps the base
    const bool plus = l.sign == Sign::Plus;
    const int same = plus ? min_a(l.vec) : min_b(l.vec);
    const int other = plus ? min_b(l.vec) : min_a(l.vec);
    if (other >= th0) {
      l.form = LinkForm::Ruling;
      plus ? shift_all(l.vec, 0, -th0) : shift_all(l.vec, -th0, 0);
    } else if (same >= th1) {
      l.form = LinkForm::Ruling;
      l.base = stabilize(atlas, l.base, l.sign, 1);
      plus ? shift_all(l.vec, -th1, 0) : shift_all(l.vec, 0, -th1);
    } else {
      return l;
    }
    l.sign = Sign::Plus;
  }
  if (invariants(atlas, l.base).tb == c) {
    if (min_a(l.vec) >= th1) {
      l.base = stabilize(atlas, l.base, Sign::Plus, 1);
      shift_all(l.vec, -th1, th0);
    } else if (min_b(l.vec) >= th1) {
      l.base = stabilize(atlas, l.base, Sign::Minus, 1);
      shift_all(l.vec, th0, -th1);
    } else {
      return l;
    }
  }
  push_ruling(atlas, l, l.p);
  return l;
}

bool comparable(const Link& x, const Link& y) {
  return x.regime == y.regime && x.n == y.n && x.p == y.p && x.q == y.q;
}

std::vector<RotTb> sorted_invariants(const KnotAtlas& atlas, const Link& l) {
  auto v = component_invariants(atlas, l);
  std::sort(v.begin(), v.end());
  return v;
}

// Canonical integer ruling link that is a stabilization of an n-copy of a
// tb = q class in which every component has both signs.
bool both_signs_copy(const KnotAtlas& atlas, const Link& canon) {
  if (canon.form != LinkForm::Ruling) return false;
  const int depth = canon.q - invariants(atlas, canon.base).tb;
  for (const auto& top : classes_at(atlas, canon.q)) {
    for (int a = 1; a < depth; ++a) {
      if (stabilize(atlas, top, a, depth - a) == canon.base) return true;
    }
  }
  return false;
}

bool is_lower_ruling(const KnotAtlas& atlas, const Link& canon) {
  return canon.form == LinkForm::Ruling && invariants(atlas, canon.base).tb < window_tb(canon.p, canon.q);
}

Verdict lesser_distinguish(const KnotAtlas& atlas, const Link& x, const Link& y) {
  if (is_lower_ruling(atlas, x) || is_lower_ruling(atlas, y)) {
    return Verdict::not_isotopic("ruling links over classes below the window are determined by their minimal underlying class");
  }
  if (x.base == y.base) {
    return Verdict::not_isotopic("cables over the same window class stay distinct below the merge thresholds");
  }
  if (invariants(atlas, x.base).rot != invariants(atlas, y.base).rot) {
    return Verdict::not_isotopic("window classes have different rotation numbers");
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    if (stabilize(atlas, x.base, s, 1) != stabilize(atlas, y.base, s, 1)) {
      return Verdict::not_isotopic(std::string("window classes have distinct ") + to_string(s) +
                                   "-stabilizations");
    }
  }
  if (!x.base.generic && !y.base.generic) {
    const Tri sd = atlas.surgery_distinct(x.base.gen, y.base.gen);
    if (sd == Tri::Yes) {
      return Verdict::not_isotopic("surgeries on the window classes give distinct contact manifolds");
    }
    return Verdict::unknown(std::string("window classes share invariants and stabilizations; surgery distinctness is ") +
                            to_string(sd));
  }
  return Verdict::unknown("window classes share invariants and stabilizations; no surgery data for a generic class");
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

void validate_link(const KnotAtlas& atlas, const Link& l) {
  if (l.n < 1) throw Error(ErrorCode::LengthMismatch, "a link needs n >= 1 components");
  if (static_cast<int>(l.vec.size()) != l.n) {
    throw Error(ErrorCode::LengthMismatch, "stabilization vector has " + std::to_string(l.vec.size()) +
                                               " entries for " + std::to_string(l.n) + " components");
  }
  for (const auto& s : l.vec) {
    if (s.a < 0 || s.b < 0) throw Error(ErrorCode::BadIndex, "stabilization counts must be nonnegative");
  }
  const Regime r = regime(atlas, l.p, l.q);
  if (r != l.regime) {
    throw Error(ErrorCode::WrongRegime, std::string("slope is ") + to_string(r) + ", link claims " +
                                            to_string(l.regime));
  }
  if (!l.base.generic) atlas.generator(l.base.gen);
  const int tb = invariants(atlas, l.base).tb;
  switch (l.regime) {
    case Regime::Greater:
      if (l.form != LinkForm::Cable) throw Error(ErrorCode::WrongRegime, "greater links use the cable form");
      return;
    case Regime::IntegerLesser:
      if (l.form == LinkForm::Twisted) {
        if (l.t < 0 || tb - l.t != l.q) {
          throw Error(ErrorCode::SlopeMismatch, "twisted copy needs q = tb(L) - t with t >= 0");
        }
        return;
      }
      if (l.form == LinkForm::Ruling) {
        if (tb >= l.q) throw Error(ErrorCode::WrongWindow, "integer ruling link needs tb(u) < q");
        return;
      }
      throw Error(ErrorCode::WrongRegime, "integer links use the twisted or ruling form");
    case Regime::NonIntegerLesser: {
      const int c = window_tb(l.p, l.q);
      if (l.form == LinkForm::TorusDivide) {
        if (tb != c) throw Error(ErrorCode::WrongWindow, "base tb must equal ceil(q/p) = " + std::to_string(c));
        return;
      }
      if (l.form == LinkForm::Ruling) {
        if (tb > c) throw Error(ErrorCode::WrongWindow, "ruling base tb must be at most ceil(q/p)");
        return;
      }
      throw Error(ErrorCode::WrongRegime, "lesser links use the torus-divide or ruling form");
    }
    case Regime::UnsupportedWindow:
      break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

Link make_greater_link(const KnotAtlas& atlas, const LegClass& u, int n, int p, int q, StabVec vec) {
  Link l{Regime::Greater, LinkForm::Cable, n, p, q, normalize(atlas, u), 0, Sign::Plus, fill_vec(std::move(vec), n)};
  validate_link(atlas, l);
  return l;
}

Link make_integer_link(const KnotAtlas& atlas, const LegClass& lc, int n, int t, StabVec vec) {
  const LegClass nl = normalize(atlas, lc);
  Link l{Regime::IntegerLesser, LinkForm::Twisted, n, 1, invariants(atlas, nl).tb - t,
         nl, t, Sign::Plus, fill_vec(std::move(vec), n)};
  if (t < 0) throw Error(ErrorCode::BadIndex, "twist count must be nonnegative");
  validate_link(atlas, l);
  return l;
}

Link make_integer_ruling(const KnotAtlas& atlas, const LegClass& u, int n, int q, StabVec vec) {
  Link l{Regime::IntegerLesser, LinkForm::Ruling, n, 1, q, normalize(atlas, u), 0, Sign::Plus,
         fill_vec(std::move(vec), n)};
  validate_link(atlas, l);
  return l;
}

Link make_lesser_link(const KnotAtlas& atlas, const LegClass& base, Sign sign, int n, int p, int q, StabVec vec) {
  Link l{Regime::NonIntegerLesser, LinkForm::TorusDivide, n, p, q, normalize(atlas, base), 0, sign,
         fill_vec(std::move(vec), n)};
  validate_link(atlas, l);
  return l;
}

Link make_lesser_ruling(const KnotAtlas& atlas, const LegClass& u, int n, int p, int q, StabVec vec) {
  Link l{Regime::NonIntegerLesser, LinkForm::Ruling, n, p, q, normalize(atlas, u), 0, Sign::Plus,
         fill_vec(std::move(vec), n)};
  validate_link(atlas, l);
  return l;
}

std::vector<RotTb> component_invariants(const KnotAtlas& atlas, const Link& l) {
  const RotTb b = invariants(atlas, l.base);
  std::vector<RotTb> out;
  for (std::size_t c = 0; c < l.vec.size(); ++c) {
    const StabPair s = l.vec[c];
    RotTb top{};
    switch (l.form) {
      case LinkForm::Cable:
      case LinkForm::Ruling:
        top = {l.p * b.rot, l.p * l.q - std::abs(l.p * b.tb - l.q)};
        break;
      case LinkForm::Twisted:
        top = {b.rot, c == 0 ? b.tb : b.tb - 2 * l.t};
        break;
      case LinkForm::TorusDivide:
        top = {l.p * b.rot + sign_value(l.sign) * theta0(l.p, l.q), l.p * l.q};
        break;
    }
    out.push_back({top.rot + s.a - s.b, top.tb - s.a - s.b});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

Link canonicalize(const KnotAtlas& atlas, const Link& link) {
  switch (link.regime) {
    case Regime::Greater: return canonical_greater(atlas, link);
    case Regime::IntegerLesser: return canonical_integer(atlas, link);
    case Regime::NonIntegerLesser: return canonical_lesser(atlas, link);
    case Regime::UnsupportedWindow: break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

Link stabilize_component(const KnotAtlas& atlas, const Link& link, int c, Sign sign, int count) {
  if (c < 0 || c >= link.n) {
    throw Error(ErrorCode::BadIndex, "component " + std::to_string(c) + " out of range for n = " +
                                         std::to_string(link.n));
  }
  if (count < 0) throw Error(ErrorCode::BadIndex, "stabilization count must be nonnegative");
  Link l = link;
  (sign == Sign::Plus ? l.vec[static_cast<std::size_t>(c)].a : l.vec[static_cast<std::size_t>(c)].b) += count;
  return canonicalize(atlas, l);
}

LinkKey canonical_key(const KnotAtlas& atlas, const Link& link) {
  const Link l = canonicalize(atlas, link);
  LinkKey k;
  k.form = l.form;
  k.base = l.base;
  k.t = l.t;
  k.sign = l.form == LinkForm::TorusDivide ? l.sign : Sign::Plus;
  if (l.form == LinkForm::Twisted && l.t > 0) {
    k.first = l.vec[0];
    k.rest.assign(l.vec.begin() + 1, l.vec.end());
  } else {
    k.rest = l.vec;
  }
  std::sort(k.rest.begin(), k.rest.end());
  return k;
}

// ---------------------------------------------------------------------------
// Decisions

Verdict isotopic(const KnotAtlas& atlas, const Link& l1, const Link& l2) {
  if (!comparable(l1, l2)) {
    throw Error(ErrorCode::RegimeMismatch, "links differ in regime, slope or component count");
  }
  const Link c1 = canonicalize(atlas, l1);
  const Link c2 = canonicalize(atlas, l2);
  const std::vector<std::string> witness{link_label(atlas, c1), link_label(atlas, c2)};
  if (canonical_key(atlas, c1) == canonical_key(atlas, c2)) {
    return Verdict::isotopic("canonical forms agree", witness);
  }
  if (sorted_invariants(atlas, c1) != sorted_invariants(atlas, c2)) {
    return Verdict::not_isotopic("component invariants differ", witness);
  }
  switch (l1.regime) {
    case Regime::Greater:
      return Verdict::not_isotopic("distinct minimal underlying classes or stabilization vectors", witness);
    case Regime::IntegerLesser: {
      if (both_signs_copy(atlas, c1) && both_signs_copy(atlas, c2)) {
        if (atlas.is_twist_even()) {
          return Verdict::isotopic("every component stabilized with both signs; twist knot links are determined by invariants",
                                   witness);
        }
        return Verdict::unknown("every component of a stabilized n-copy carries both signs; no classification for this atlas",
                                witness);
      }
      return Verdict::not_isotopic("distinct twisted or stabilized n-copies", witness);
    }
    case Regime::NonIntegerLesser: {
      Verdict v = lesser_distinguish(atlas, c1, c2);
      v.witness = witness;
      return v;
    }
    case Regime::UnsupportedWindow: break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

ComponentClass component_class(const KnotAtlas& atlas, const Link& link, int c) {
  if (c < 0 || c >= link.n) throw Error(ErrorCode::BadIndex, "component index out of range");
  const StabPair s = link.vec[static_cast<std::size_t>(c)];
  switch (link.regime) {
    case Regime::Greater:
      return cable_stabilize(atlas, CableClass{normalize(atlas, link.base), link.p, link.q, 0, 0}, s.a, s.b);
    case Regime::IntegerLesser:
      if (link.form == LinkForm::Twisted && c > 0) {
        return stabilize(atlas, link.base, link.t + s.a, link.t + s.b);
      }
      return stabilize(atlas, link.base, s.a, s.b);
    case Regime::NonIntegerLesser: {
      Link one = link;
      one.n = 1;
      one.vec = {s};
      return canonicalize(atlas, one);
    }
    case Regime::UnsupportedWindow: break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

Verdict components_isotopic(const KnotAtlas& atlas, const ComponentClass& x, const ComponentClass& y) {
  if (x.index() != y.index()) throw Error(ErrorCode::KindMismatch, "components come from different regimes");
  if (const auto* cx = std::get_if<CableClass>(&x)) {
    return cable_equal(atlas, *cx, std::get<CableClass>(y)) ? Verdict::isotopic("equal diamond points")
                                                            : Verdict::not_isotopic("distinct diamond points");
  }
  if (const auto* kx = std::get_if<LegClass>(&x)) {
    return is_equal(atlas, *kx, std::get<LegClass>(y)) ? Verdict::isotopic("equal normal forms")
                                                       : Verdict::not_isotopic("distinct normal forms");
  }
  return isotopic(atlas, std::get<Link>(x), std::get<Link>(y));
}

bool componentwise_isotopic(const KnotAtlas& atlas, const Link& l1, const Link& l2) {
  if (!comparable(l1, l2)) {
    throw Error(ErrorCode::RegimeMismatch, "links differ in regime, slope or component count");
  }
  const int n = l1.n;
  std::vector<std::vector<bool>> match(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const auto ci = component_class(atlas, l1, i);
    for (int j = 0; j < n; ++j) {
      match[i][j] = components_isotopic(atlas, ci, component_class(atlas, l2, j)).is_isotopic();
    }
  }
  // bipartite matching by augmenting paths
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  auto augment = [&](auto&& self, int i, std::vector<bool>& seen) -> bool {
    for (int j = 0; j < n; ++j) {
      if (!match[i][j] || seen[j]) continue;
      seen[j] = true;
      if (owner[j] < 0 || self(self, owner[j], seen)) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (!augment(augment, i, seen)) return false;
  }
  return true;
}

Verdict permutation_realizable(const KnotAtlas& atlas, const Link& link, const std::vector<int>& perm) {
  const int n = link.n;
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::NotAPermutation, "permutation has wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) throw Error(ErrorCode::NotAPermutation, "not a permutation of the components");
    hit[v] = true;
  }
  const auto inv = component_invariants(atlas, link);
  for (int c = 0; c < n; ++c) {
    if (inv[c] != inv[perm[c]]) {
      return Verdict::not_isotopic("permutation does not respect component invariants");
    }
  }
  switch (link.regime) {
    case Regime::Greater:
      return Verdict::isotopic("greater-sloped links realize every invariant-preserving permutation");
    case Regime::IntegerLesser: {
      const Link canon = canonicalize(atlas, link);
      std::vector<int> top;
      if (canon.form == LinkForm::Twisted && canon.t == 0) {
        for (int c = 0; c < n; ++c) {
          if (canon.vec[c] == StabPair{}) top.push_back(c);
        }
      }
      if (top.size() < 2) {
        return Verdict::isotopic("invariant-preserving permutation of a link that is not an n-copy");
      }
      if (canon.q == atlas.tbb()) {
        for (int c : top) {
          if (perm[c] != c) {
            return Verdict::not_isotopic("maximal-tb components of an n-copy of a tbb class cannot be permuted");
          }
        }
        return Verdict::isotopic("permutation fixes the maximal-tb components");
      }
      const std::size_t m = top.size();
      for (std::size_t shift = 0; shift < m; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) ok = perm[top[i]] == top[(i + shift) % m];
        if (ok) return Verdict::isotopic("cyclic permutation of the maximal-tb components");
      }
      return Verdict::not_isotopic("only cyclic permutations of the maximal-tb components are realizable");
    }
    case Regime::NonIntegerLesser: {
      bool identity = true;
      for (int c = 0; c < n; ++c) identity = identity && perm[c] == c;
      if (identity) return Verdict::isotopic("identity permutation");
      return Verdict::unknown("no ordered classification is available for non-integer lesser slopes");
    }
    case Regime::UnsupportedWindow: break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

std::vector<Link> enumerate_nondestab_links(const KnotAtlas& atlas, int n, int p, int q) {
  std::vector<Link> out;
  switch (regime(atlas, p, q)) {
    case Regime::Greater:
      for (int g : peaks(atlas)) out.push_back(make_greater_link(atlas, LegClass::named(g), n, p, q));
      return out;
    case Regime::IntegerLesser:
      for (const auto& c : enumerate_classes(atlas, q)) {
        out.push_back(make_integer_link(atlas, c, n, invariants(atlas, c).tb - q));
      }
      return out;
    case Regime::NonIntegerLesser:
      for (const auto& b : window_classes(atlas, p, q)) {
        out.push_back(make_lesser_link(atlas, b, Sign::Plus, n, p, q));
        out.push_back(make_lesser_link(atlas, b, Sign::Minus, n, p, q));
      }
      return out;
    case Regime::UnsupportedWindow:
      break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

std::string link_label(const KnotAtlas& atlas, const Link& l) {
  const std::string slope = "(" + std::to_string(l.p * l.n) + "," + std::to_string(l.q * l.n) + ")";
  std::string s;
  switch (l.form) {
    case LinkForm::Cable: s = "(" + label(atlas, l.base) + ")_" + slope; break;
    case LinkForm::Ruling: s = "R(" + label(atlas, l.base) + ")_" + slope; break;
    case LinkForm::Twisted:
      s = "T^" + std::to_string(l.t) + "(" + std::to_string(l.n) + " " + label(atlas, l.base) + ")";
      break;
    case LinkForm::TorusDivide:
      s = "(" + label(atlas, l.base) + ")^" + to_string(l.sign) + "_" + slope;
      break;
  }
  s += "[";
  for (std::size_t c = 0; c < l.vec.size(); ++c) s += (c ? "," : "") + pair_text(l.vec[c]);
  return s + "]";
}

// ---------------------------------------------------------------------------

MountainRange lesser_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min) {
  if (regime(atlas, p, q) != Regime::NonIntegerLesser) {
    throw Error(ErrorCode::WrongRegime, "lesser mountain range needs a non-integer lesser slope");
  }
  if (tb_min > p * q) throw Error(ErrorCode::CutoffAbovePeak, "tb cutoff above the cable peak pq");
  std::vector<Link> seeds;
  for (const auto& b : window_classes(atlas, p, q)) {
    seeds.push_back(make_lesser_link(atlas, b, Sign::Plus, 1, p, q));
    seeds.push_back(make_lesser_link(atlas, b, Sign::Minus, 1, p, q));
  }
  // peaks below the window are not stabilizations of window classes
  for (int g : peaks(atlas)) {
    if (atlas.generator(g).rot_tb.tb < window_tb(p, q)) {
      seeds.push_back(make_lesser_ruling(atlas, LegClass::named(g), 1, p, q));
    }
  }
  std::set<LinkKey> seen;
  MountainRange mr(tb_min, true);
  for (const auto& seed : seeds) {
    const int room = component_invariants(atlas, seed)[0].tb - tb_min;
    for (int a = 0; a <= room; ++a) {
      for (int b = 0; a + b <= room; ++b) {
        Link l = seed;
        l.vec = {{a, b}};
        const Link canon = canonicalize(atlas, l);
        if (seen.insert(canonical_key(atlas, canon)).second) {
          mr.add(component_invariants(atlas, canon)[0], link_label(atlas, canon));
        }
      }
    }
  }
  return mr;
}

}  // namespace legcable

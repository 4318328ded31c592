#include "legcable/cables.hpp"

#include <numeric>
#include <set>

namespace legcable {

Slope make_slope(int p, int q) {
  if (p < 1 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotReduced,
                "slope (" + std::to_string(p) + "," + std::to_string(q) + ") is not reduced with p >= 1");
  }
  return {p, q};
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Greater: return "greater";
    case Regime::IntegerLesser: return "integer-lesser";
    case Regime::NonIntegerLesser: return "non-integer-lesser";
    case Regime::UnsupportedWindow: return "unsupported-window";
  }
  return "unsupported-window";
}

Regime regime_from_string(const std::string& s) {
  for (Regime r : {Regime::Greater, Regime::IntegerLesser, Regime::NonIntegerLesser,
                   Regime::UnsupportedWindow}) {
    if (s == to_string(r)) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown regime '" + s + "'");
}

Regime regime(const KnotAtlas& atlas, int p, int q) {
  make_slope(p, q);
  if (q > p * atlas.width_ceiling()) return Regime::Greater;
  if (p == 1 && q <= atlas.tbb()) return Regime::IntegerLesser;
  if (p > 1 && q < p * atlas.tbb() && atlas.uniformly_thick()) return Regime::NonIntegerLesser;
  return Regime::UnsupportedWindow;
}

namespace {

void require_regime(const KnotAtlas& atlas, int p, int q, Regime want) {
  Regime got = regime(atlas, p, q);
  if (got != want) {
    throw Error(ErrorCode::WrongRegime, "slope (" + std::to_string(p) + "," + std::to_string(q) +
                                            ") is " + to_string(got) + ", expected " + to_string(want));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CableClass greater_cable(const KnotAtlas& atlas, const LegClass& u, int p, int q) {
  require_regime(atlas, p, q, Regime::Greater);
  return {normalize(atlas, u), p, q, 0, 0};
}

CableClass cable_stabilize(const KnotAtlas& atlas, const CableClass& c, Sign sign, int count) {
  if (count < 0) throw Error(ErrorCode::BadIndex, "stabilization count must be nonnegative");
  return sign == Sign::Plus ? cable_stabilize(atlas, c, count, 0) : cable_stabilize(atlas, c, 0, count);
}

CableClass cable_stabilize(const KnotAtlas& atlas, const CableClass& c, int a, int b) {
  CableClass out = c;
  out.i += a;
  out.j += b;
  const int push_a = out.i / out.p;
  const int push_b = out.j / out.p;
  out.i -= push_a * out.p;
  out.j -= push_b * out.p;
  out.u = stabilize(atlas, out.u, push_a, push_b);
  return out;
}

RotTb cable_invariants(const KnotAtlas& atlas, const CableClass& c) {
  const RotTb u = invariants(atlas, c.u);
  return {c.p * u.rot + c.i - c.j, c.p * c.q - (c.q - c.p * u.tb) - c.i - c.j};
}

bool cable_equal(const KnotAtlas& atlas, const CableClass& c1, const CableClass& c2) {
  if (c1.p != c2.p || c1.q != c2.q) throw Error(ErrorCode::SlopeMismatch, "cables have different slopes");
  // canonical (i, j) are already reduced below p
  const CableClass x = cable_stabilize(atlas, c1, 0, 0);
  const CableClass y = cable_stabilize(atlas, c2, 0, 0);
  return is_equal(atlas, x.u, y.u) && x.i == y.i && x.j == y.j;
}

MountainRange cable_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min) {
  require_regime(atlas, p, q, Regime::Greater);
  // cable tb over u is pq - q + p*tb(u)
  const int u_min = ceil_div(tb_min - p * q + q, p);
  if (u_min > atlas.tbb()) {
    throw Error(ErrorCode::CutoffAbovePeak, "tb cutoff above the cable peak");
  }
  MountainRange mr(tb_min, true);
  for (const auto& u : enumerate_classes(atlas, u_min)) {
    const CableClass top{u, p, q, 0, 0};
    const int room = cable_invariants(atlas, top).tb - tb_min;
    for (int i = 0; i < p && i <= room; ++i) {
      for (int j = 0; j < p && i + j <= room; ++j) {
        const CableClass c{u, p, q, i, j};
        mr.add(cable_invariants(atlas, c), cable_label(atlas, c));
      }
    }
  }
  return mr;
}

std::string cable_label(const KnotAtlas& atlas, const CableClass& c) {
  std::string s = "(" + label(atlas, c.u) + ")_(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
  if (c.i || c.j) s += "[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
  return s;
}

// ---------------------------------------------------------------------------

IntegerLinkBase twisted_copy(const KnotAtlas& atlas, const LegClass& l, int n, int t) {
  if (n < 1) throw Error(ErrorCode::LengthMismatch, "twisted copy needs n >= 1");
  if (t < 0) throw Error(ErrorCode::BadIndex, "twist count must be nonnegative");
  return {normalize(atlas, l), n, t};
}

int twisted_slope(const KnotAtlas& atlas, const IntegerLinkBase& base) {
  return invariants(atlas, base.l).tb - base.t;
}

std::vector<RotTb> twisted_invariants(const KnotAtlas& atlas, const IntegerLinkBase& base) {
  const RotTb l = invariants(atlas, base.l);
  std::vector<RotTb> out(static_cast<std::size_t>(base.n), RotTb{l.rot, l.tb - 2 * base.t});
  out[0] = l;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<LegClass> window_classes(const KnotAtlas& atlas, int p, int q) {
  require_regime(atlas, p, q, Regime::NonIntegerLesser);
  return classes_at(atlas, window_tb(p, q));
}

LesserClass lesser_cable(const KnotAtlas& atlas, const LegClass& base, Sign sign, int p, int q) {
  require_regime(atlas, p, q, Regime::NonIntegerLesser);
  const LegClass nb = normalize(atlas, base);
  if (invariants(atlas, nb).tb != window_tb(p, q)) {
    throw Error(ErrorCode::WrongWindow, "base tb must equal ceil(q/p) = " + std::to_string(window_tb(p, q)));
  }
  return {nb, sign, p, q, 0, 0};
}

RotTb lesser_invariants(const KnotAtlas& atlas, const LesserClass& c) {
  const RotTb b = invariants(atlas, c.base);
  return {c.p * b.rot + sign_value(c.sign) * theta0(c.p, c.q) + c.a - c.b, c.p * c.q - c.a - c.b};
}

}  // namespace legcable

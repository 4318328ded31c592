#pragma once

#include <vector>

#include "legcable/atlas.hpp"
#include "legcable/mountain.hpp"

namespace legcable {

/// Homology class p*lambda + q*mu with gcd(p, q) = 1 and p >= 1.
struct Slope {
  int p = 1;
  int q = 0;

  auto operator<=>(const Slope&) const = default;
};

/// Throws NotReduced unless p >= 1 and gcd(p, q) = 1.
Slope make_slope(int p, int q);

enum class Regime { Greater, IntegerLesser, NonIntegerLesser, UnsupportedWindow };

const char* to_string(Regime r);
Regime regime_from_string(const std::string& s);

Regime regime(const KnotAtlas& atlas, int p, int q);

// ---------------------------------------------------------------------------
// Greater-sloped cables

/// A point of the diamond over u: S_+^i S_-^j of the (p,q)-cable of u.
struct CableClass {
  LegClass u;
  int p = 1;
  int q = 0;
  int i = 0;
  int j = 0;

  auto operator<=>(const CableClass&) const = default;
};

CableClass greater_cable(const KnotAtlas& atlas, const LegClass& u, int p, int q);
CableClass cable_stabilize(const KnotAtlas& atlas, const CableClass& c, Sign sign, int count = 1);
CableClass cable_stabilize(const KnotAtlas& atlas, const CableClass& c, int a, int b);
RotTb cable_invariants(const KnotAtlas& atlas, const CableClass& c);
/// Throws SlopeMismatch when the slopes differ.
bool cable_equal(const KnotAtlas& atlas, const CableClass& c1, const CableClass& c2);
MountainRange cable_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min);
std::string cable_label(const KnotAtlas& atlas, const CableClass& c);

// ---------------------------------------------------------------------------
// Integer slopes: twisted n-copies

/// L together with n-1 ruling curves of slope tb(L) - t.
struct IntegerLinkBase {
  LegClass l;
  int n = 1;
  int t = 0;
};

IntegerLinkBase twisted_copy(const KnotAtlas& atlas, const LegClass& l, int n, int t);
int twisted_slope(const KnotAtlas& atlas, const IntegerLinkBase& base);
std::vector<RotTb> twisted_invariants(const KnotAtlas& atlas, const IntegerLinkBase& base);

// ---------------------------------------------------------------------------
// Non-integer lesser slopes

/// tb of the classes whose standard neighbourhoods carry the +/- cables.
inline int window_tb(int p, int q) { return ceil_div(q, p); }
/// p*ceil(q/p) - q, in (0, p) for non-integer q/p.
inline int theta0(int p, int q) { return p * window_tb(p, q) - q; }
inline int theta1(int p, int q) { return p - theta0(p, q); }

/// The +/- standard (p,q)-cable of a window class, stabilized (a, b) times.
struct LesserClass {
  LegClass base;
  Sign sign = Sign::Plus;
  int p = 2;
  int q = 1;
  int a = 0;
  int b = 0;
};

/// Window classes: distinct normal forms at tb = ceil(q/p).
std::vector<LegClass> window_classes(const KnotAtlas& atlas, int p, int q);
LesserClass lesser_cable(const KnotAtlas& atlas, const LegClass& base, Sign sign, int p, int q);
RotTb lesser_invariants(const KnotAtlas& atlas, const LesserClass& c);
/// Enumerates lesser cable knots and merges them through link canonicalization.
MountainRange lesser_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min);

}  // namespace legcable

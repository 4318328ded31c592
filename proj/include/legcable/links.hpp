#pragma once

#include <string>
#include <variant>
#include <vector>

#include "legcable/atlas.hpp"
#include "legcable/cables.hpp"

namespace legcable {

/// How the components sit relative to the base class.
///  Cable:       greater-sloped (np,nq)-cable of base.
///  Twisted:     T^t(n base), component 1 is base itself (integer slopes).
///  Ruling:      ruling curves on a neighbourhood of base whose dividing slope
///               is at most q/p (integer or non-integer lesser slopes).
///  TorusDivide: the +/- standard cable of a window class (non-integer slopes).
enum class LinkForm { Cable, Twisted, Ruling, TorusDivide };

const char* to_string(LinkForm f);
LinkForm link_form_from_string(const std::string& s);

/// An n-component cable link with per-component stabilization counts.
/// Component order is the construction order; equality questions are
/// answered up to relabeling unless stated otherwise.
struct Link {
  Regime regime = Regime::Greater;
  LinkForm form = LinkForm::Cable;
  int n = 1;
  int p = 1;
  int q = 0;
  LegClass base;
  int t = 0;               // Twisted only
  Sign sign = Sign::Plus;  // TorusDivide only
  StabVec vec;

  bool operator==(const Link&) const = default;
};

Link make_greater_link(const KnotAtlas& atlas, const LegClass& u, int n, int p, int q, StabVec vec = {});
/// T^t(nL) with slope q = tb(L) - t.
Link make_integer_link(const KnotAtlas& atlas, const LegClass& l, int n, int t, StabVec vec = {});
/// Integer-slope ruling link: every component is u; needs tb(u) < q.
Link make_integer_ruling(const KnotAtlas& atlas, const LegClass& u, int n, int q, StabVec vec = {});
Link make_lesser_link(const KnotAtlas& atlas, const LegClass& base, Sign sign, int n, int p, int q,
                      StabVec vec = {});
/// Needs tb(u) <= ceil(q/p).
Link make_lesser_ruling(const KnotAtlas& atlas, const LegClass& u, int n, int p, int q, StabVec vec = {});

/// Re-runs every validity check; used on links read from documents.
void validate_link(const KnotAtlas& atlas, const Link& link);

std::vector<RotTb> component_invariants(const KnotAtlas& atlas, const Link& link);

/// Unique representative of the link's class under the regime's rewrites.
Link canonicalize(const KnotAtlas& atlas, const Link& link);

/// `c` is 0-based. Throws BadIndex.
Link stabilize_component(const KnotAtlas& atlas, const Link& link, int c, Sign sign, int count = 1);

/// Order-insensitive description of a canonical link; equal keys mean isotopic.
struct LinkKey {
  LinkForm form = LinkForm::Cable;
  LegClass base;
  int t = 0;
  Sign sign = Sign::Plus;
  StabPair first;  // distinguished component of a Twisted link
  StabVec rest;    // sorted

  auto operator<=>(const LinkKey&) const = default;
};

LinkKey canonical_key(const KnotAtlas& atlas, const Link& link);

/// Unordered isotopy. Throws RegimeMismatch for incomparable links.
Verdict isotopic(const KnotAtlas& atlas, const Link& l1, const Link& l2);

/// Knot class of one component: a greater cable point, an atlas class, or a
/// one-component lesser cable.
using ComponentClass = std::variant<CableClass, LegClass, Link>;

ComponentClass component_class(const KnotAtlas& atlas, const Link& link, int c);
Verdict components_isotopic(const KnotAtlas& atlas, const ComponentClass& x, const ComponentClass& y);

/// True iff some bijection of components matches them up to isotopy.
/// Components whose comparison is Unknown are treated as unmatched.
bool componentwise_isotopic(const KnotAtlas& atlas, const Link& l1, const Link& l2);

/// perm is 0-based; component c is sent to perm[c].
Verdict permutation_realizable(const KnotAtlas& atlas, const Link& link, const std::vector<int>& perm);

/// Links that are not stabilizations of other links, zero stabilization vectors.
std::vector<Link> enumerate_nondestab_links(const KnotAtlas& atlas, int n, int p, int q);

std::string link_label(const KnotAtlas& atlas, const Link& link);

}  // namespace legcable

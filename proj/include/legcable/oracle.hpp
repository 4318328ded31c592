#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "legcable/atlas.hpp"
#include "legcable/cables.hpp"
#include "legcable/links.hpp"
#include "legcable/mountain.hpp"

namespace legcable {

/// Bounds for the brute-force searches. Exceeding either one makes the
/// search inconclusive; it never turns into a wrong answer.
struct SearchBudget {
  int depth = 64;                // BFS distance from the start object
  std::size_t node_cap = 200000;  // states per orbit
};

/// Raw presentation explored by the oracle. Nothing here is normalized:
/// the search applies single atlas rules and single link moves in both
/// directions.
struct OracleState {
  enum Kind { Knot, Cable, Twisted, Ruling, TorusDivide };

  Kind kind = Knot;
  LegClass u;
  int t = 0;
  Sign sign = Sign::Plus;
  StabVec vec;  // sorted, except that a Twisted state with t > 0 keeps entry 0 first

  auto operator<=>(const OracleState&) const = default;
};

struct OrbitResult {
  std::vector<OracleState> states;  // BFS order, states[0] is the start
  bool complete = false;
};

/// Search context: one atlas plus, for links, the slope data.
class Oracle {
 public:
  explicit Oracle(const KnotAtlas& atlas, SearchBudget budget = {});
  Oracle(const KnotAtlas& atlas, Regime regime, int n, int p, int q, SearchBudget budget = {});

  OracleState state_of(const LegClass& c) const;
  OracleState state_of(const Link& l) const;

  std::vector<OracleState> neighbours(const OracleState& s) const;
  OrbitResult orbit(const OracleState& start) const;

  /// Isotopic with a path witness, NotIsotopic after exhausting the orbit,
  /// Unknown when the budget runs out.
  Verdict closure_equal(const OracleState& x, const OracleState& y) const;

  /// Smallest state of the orbit; throws BudgetExceeded.
  OracleState orbit_min(const OracleState& s) const;

  std::string state_label(const OracleState& s) const;
  RotTb state_invariants(const OracleState& s) const;  // first component for links

 private:
  const KnotAtlas* atlas_;
  SearchBudget budget_;
  bool link_ = false;
  Regime regime_ = Regime::Greater;
  int n_ = 1;
  int p_ = 1;
  int q_ = 0;

  void knot_moves(const LegClass& c, std::vector<LegClass>& out) const;
  std::vector<LegClass> raw_destab(const LegClass& c, Sign s) const;
  bool valid_generic(RotTb inv) const;
  OracleState tidy(OracleState s) const;
};

Verdict closure_equal(const KnotAtlas& atlas, const LegClass& c1, const LegClass& c2, SearchBudget budget = {});
/// Throws KindMismatch for links of different regime, slope or size.
Verdict closure_equal(const KnotAtlas& atlas, const Link& l1, const Link& l2, SearchBudget budget = {});
Verdict closure_equal(const KnotAtlas& atlas, const CableClass& c1, const CableClass& c2, SearchBudget budget = {});

/// Mountain ranges by exhaustive enumeration of raw presentations,
/// quotiented by the closure. Throw BudgetExceeded.
MountainRange brute_mountain_range(const KnotAtlas& atlas, int tb_min, SearchBudget budget = {});
MountainRange brute_cable_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min, SearchBudget budget = {});
MountainRange brute_lesser_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min, SearchBudget budget = {});

struct Divergence {
  LegClass start;
  std::vector<LegClass> normal_forms;
};

struct ConfluenceReport {
  int checked = 0;
  std::vector<Divergence> divergences;

  bool ok() const { return divergences.empty(); }
};

/// Follows every maximal rewrite sequence from Named(g, a, b), a + b <= depth.
ConfluenceReport check_confluence(const KnotAtlas& atlas, int depth);

struct OracleRecord {
  std::string input;
  Verdict verdict;
};

/// [{input, verdict, path-witness}]
nlohmann::json oracle_report(const std::vector<OracleRecord>& records);
nlohmann::json confluence_report(const KnotAtlas& atlas, const ConfluenceReport& report);

}  // namespace legcable

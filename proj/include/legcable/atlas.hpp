#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legcable/mountain.hpp"
#include "legcable/types.hpp"

namespace legcable {

/// Answer of the surgery-distinctness relation on a pair of generators.
enum class Tri { Yes, No, Unknown };

const char* to_string(Tri t);
Tri tri_from_string(const std::string& s);

struct Generator {
  std::string id;
  std::string name;
  RotTb rot_tb;
};

/// A Legendrian isotopy class: either a named generator stabilized a times
/// positively and b times negatively, or a class fixed by its invariants.
struct LegClass {
  bool generic = false;
  int gen = -1;  // index into KnotAtlas::generators()
  int a = 0;
  int b = 0;
  RotTb inv{};  // only for generic classes

  static LegClass named(int g, int a = 0, int b = 0) { return {false, g, a, b, {}}; }
  static LegClass generic_at(RotTb inv) { return {true, -1, 0, 0, inv}; }

  auto operator<=>(const LegClass&) const = default;
};

/// (src, da, db) -> dst. dst < 0 means the class is determined by invariants.
struct RewriteRule {
  int src = 0;
  int da = 0;
  int db = 0;
  int dst = -1;

  bool to_generic() const { return dst < 0; }
};

// Textual description fed to make_atlas, keyed by generator ids.
struct GeneratorSpec {
  std::string id;
  std::string name;
  int rot = 0;
  int tb = 0;
};

struct RuleSpec {
  std::string src;
  int da = 0;
  int db = 0;
  std::string dst;  // generator id or "generic"
};

struct SurgerySpec {
  std::string a;
  std::string b;
  Tri value = Tri::Unknown;
};

struct SigmaSpec {
  std::string peak;
  std::string edge;
};

struct AtlasSpec {
  std::string name;
  std::string family;  // "twist-even", "k-minus-5", "unknot" or empty
  std::vector<GeneratorSpec> generators;
  std::vector<RuleSpec> rules;
  int tbb = 0;
  int width_ceiling = 0;
  bool uniformly_thick = false;
  std::vector<SurgerySpec> surgery_distinct;
  std::vector<SigmaSpec> sigma_plus;
  std::vector<SigmaSpec> sigma_minus;
};

/// Finite presentation of the Legendrian classification of one knot type.
/// Immutable once built; construct through make_atlas or builtin_atlas.
class KnotAtlas {
 public:
  const std::string& name() const { return name_; }
  const std::string& family() const { return family_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int tbb() const { return tbb_; }
  int width_ceiling() const { return width_ceiling_; }
  bool uniformly_thick() const { return uniformly_thick_; }
  bool is_twist_even() const { return family_ == "twist-even"; }

  Tri surgery_distinct(int g1, int g2) const;
  const std::map<std::pair<int, int>, Tri>& surgery_table() const { return surgery_; }
  const std::vector<std::pair<int, int>>& sigma_plus() const { return sigma_plus_; }
  const std::vector<std::pair<int, int>>& sigma_minus() const { return sigma_minus_; }

  /// Index of generator `id`; throws UnknownGenerator.
  int index_of(const std::string& id) const;
  const Generator& generator(int idx) const;

  /// Copy of this atlas with one surgery-distinctness entry replaced.
  KnotAtlas with_surgery(int g1, int g2, Tri value) const;
  /// Copy with `value` on every unordered pair of distinct peaks.
  KnotAtlas with_peak_surgery(Tri value) const;

  /// Back to the textual description (used by the interchange format).
  AtlasSpec to_spec() const;

 private:
  friend KnotAtlas make_atlas(const AtlasSpec& spec);

  std::string name_;
  std::string family_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
  int tbb_ = 0;
  int width_ceiling_ = 0;
  bool uniformly_thick_ = false;
  std::map<std::pair<int, int>, Tri> surgery_;
  std::vector<std::pair<int, int>> sigma_plus_;
  std::vector<std::pair<int, int>> sigma_minus_;
};

KnotAtlas make_atlas(const AtlasSpec& spec);

enum class BuiltinKind { Unknot, TwistEven, KMinus5 };

/// sigma maps are 1-based peak -> edge-base indices; empty selects
/// i -> ((i - 1) mod k) + 1.
KnotAtlas builtin_atlas(BuiltinKind kind, int n = 0, std::vector<int> sigma_plus = {},
                        std::vector<int> sigma_minus = {});

/// "unknot", "k-minus-5", "twist-even-<n>".
KnotAtlas builtin_atlas(const std::string& name);
bool is_builtin_name(const std::string& name);

/// Atlases exercised by the self checks.
std::vector<KnotAtlas> builtin_atlases();

RotTb invariants(const KnotAtlas& atlas, const LegClass& c);
LegClass normalize(const KnotAtlas& atlas, const LegClass& c);
LegClass stabilize(const KnotAtlas& atlas, const LegClass& c, Sign sign, int count = 1);
/// Applies a positive and b negative stabilizations at once.
LegClass stabilize(const KnotAtlas& atlas, const LegClass& c, int a, int b);
bool is_equal(const KnotAtlas& atlas, const LegClass& c1, const LegClass& c2);

/// Generators that are not the image of any stabilization.
std::vector<int> peaks(const KnotAtlas& atlas);

/// Every distinct normal form with tb >= tb_min, sorted.
std::vector<LegClass> enumerate_classes(const KnotAtlas& atlas, int tb_min);
/// Distinct normal forms with tb exactly `tb`.
std::vector<LegClass> classes_at(const KnotAtlas& atlas, int tb);

MountainRange mountain_range(const KnotAtlas& atlas, int tb_min);

std::string label(const KnotAtlas& atlas, const LegClass& c);

}  // namespace legcable

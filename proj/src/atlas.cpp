#include "legcable/atlas.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace legcable {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::MetadataInconsistent: return "MetadataInconsistent";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::CutoffAbovePeak: return "CutoffAbovePeak";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::WrongWindow: return "WrongWindow";
    case ErrorCode::SlopeMismatch: return "SlopeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Isotopic: return "Isotopic";
    case Verdict::Kind::NotIsotopic: return "NotIsotopic";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri tri_from_string(const std::string& s) {
  if (s == "yes") return Tri::Yes;
  if (s == "no") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  throw Error(ErrorCode::ParseError, "surgery value must be yes|no|unknown, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// KnotAtlas

Tri KnotAtlas::surgery_distinct(int g1, int g2) const {
  if (g1 == g2) return Tri::No;
  auto it = surgery_.find({std::min(g1, g2), std::max(g1, g2)});
  return it == surgery_.end() ? Tri::Unknown : it->second;
}

int KnotAtlas::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].id == id) return static_cast<int>(i);
  }
  throw Error(ErrorCode::UnknownGenerator, "no generator '" + id + "' in atlas " + name_);
}

const Generator& KnotAtlas::generator(int idx) const {
  if (idx < 0 || idx >= static_cast<int>(generators_.size())) {
    throw Error(ErrorCode::UnknownGenerator,
                "generator index " + std::to_string(idx) + " out of range in atlas " + name_);
  }
  return generators_[static_cast<std::size_t>(idx)];
}

KnotAtlas KnotAtlas::with_surgery(int g1, int g2, Tri value) const {
  generator(g1);
  generator(g2);
  KnotAtlas copy = *this;
  if (g1 != g2) copy.surgery_[{std::min(g1, g2), std::max(g1, g2)}] = value;
  return copy;
}

KnotAtlas KnotAtlas::with_peak_surgery(Tri value) const {
  KnotAtlas copy = *this;
  auto ps = peaks(*this);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      copy.surgery_[{std::min(ps[i], ps[j]), std::max(ps[i], ps[j])}] = value;
    }
  }
  return copy;
}

AtlasSpec KnotAtlas::to_spec() const {
  AtlasSpec spec;
  spec.name = name_;
  spec.family = family_;
  for (const auto& g : generators_) {
    spec.generators.push_back({g.id, g.name, g.rot_tb.rot, g.rot_tb.tb});
  }
  for (const auto& r : rules_) {
    spec.rules.push_back({generators_[r.src].id, r.da, r.db,
                          r.to_generic() ? std::string("generic") : generators_[r.dst].id});
  }
  spec.tbb = tbb_;
  spec.width_ceiling = width_ceiling_;
  spec.uniformly_thick = uniformly_thick_;
  for (const auto& [pair, v] : surgery_) {
    spec.surgery_distinct.push_back({generators_[pair.first].id, generators_[pair.second].id, v});
  }
  for (const auto& [p, e] : sigma_plus_) spec.sigma_plus.push_back({generators_[p].id, generators_[e].id});
  for (const auto& [p, e] : sigma_minus_) spec.sigma_minus.push_back({generators_[p].id, generators_[e].id});
  return spec;
}

KnotAtlas make_atlas(const AtlasSpec& spec) {
  KnotAtlas atlas;
  atlas.name_ = spec.name;
  atlas.family_ = spec.family;

  std::unordered_map<std::string, int> ids;
  if (spec.generators.empty()) {
    throw Error(ErrorCode::MetadataInconsistent, "atlas '" + spec.name + "' has no generators");
  }
  for (const auto& g : spec.generators) {
    if (g.id == "generic") {
      throw Error(ErrorCode::DuplicateId, "'generic' is reserved and cannot be a generator id");
    }
    if (!ids.emplace(g.id, static_cast<int>(atlas.generators_.size())).second) {
      throw Error(ErrorCode::DuplicateId, "generator id '" + g.id + "' repeated");
    }
    if (!is_odd(g.rot + g.tb)) {
      throw Error(ErrorCode::ParityViolation, "generator '" + g.id + "' has rot+tb even");
    }
    atlas.generators_.push_back({g.id, g.name.empty() ? g.id : g.name, {g.rot, g.tb}});
  }
  auto lookup = [&](const std::string& id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw Error(ErrorCode::UnknownGenerator, "rule references unknown generator '" + id + "'");
    return it->second;
  };

  for (const auto& r : spec.rules) {
    RewriteRule rule;
    rule.src = lookup(r.src);
    rule.da = r.da;
    rule.db = r.db;
    if (r.da < 0 || r.db < 0 || r.da + r.db < 1) {
      throw Error(ErrorCode::InvariantMismatch,
                  "rule from '" + r.src + "' must have nonnegative thresholds with da+db >= 1");
    }
    rule.dst = r.dst == "generic" ? -1 : lookup(r.dst);
    if (!rule.to_generic()) {
      const RotTb s = atlas.generators_[rule.src].rot_tb;
      const RotTb d = atlas.generators_[rule.dst].rot_tb;
      if (d.rot != s.rot + r.da - r.db || d.tb != s.tb - r.da - r.db) {
        throw Error(ErrorCode::InvariantMismatch,
                    "rule " + r.src + " -> " + r.dst + " does not preserve (rot, tb)");
      }
    }
    atlas.rules_.push_back(rule);
  }

  int max_tb = atlas.generators_.front().rot_tb.tb;
  for (const auto& g : atlas.generators_) max_tb = std::max(max_tb, g.rot_tb.tb);
  if (spec.tbb != max_tb) {
    throw Error(ErrorCode::MetadataInconsistent,
                "tbb " + std::to_string(spec.tbb) + " differs from maximal generator tb " +
                    std::to_string(max_tb));
  }
  if (spec.width_ceiling < spec.tbb) {
    throw Error(ErrorCode::MetadataInconsistent, "width ceiling below tbb");
  }
  if (spec.uniformly_thick && spec.width_ceiling != spec.tbb) {
    throw Error(ErrorCode::MetadataInconsistent, "uniformly thick atlas needs width_ceiling == tbb");
  }
  atlas.tbb_ = spec.tbb;
  atlas.width_ceiling_ = spec.width_ceiling;
  atlas.uniformly_thick_ = spec.uniformly_thick;

  for (const auto& s : spec.surgery_distinct) {
    int a = lookup(s.a);
    int b = lookup(s.b);
    if (a == b) continue;
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto [it, fresh] = atlas.surgery_.emplace(key, s.value);
    if (!fresh && it->second != s.value) {
      throw Error(ErrorCode::MetadataInconsistent,
                  "conflicting surgery entries for " + s.a + "/" + s.b);
    }
  }

  auto check_sigma = [&](const std::vector<SigmaSpec>& entries, int da, int db,
                         std::vector<std::pair<int, int>>& out) {
    for (const auto& e : entries) {
      int p = lookup(e.peak);
      int d = lookup(e.edge);
      bool found = std::any_of(atlas.rules_.begin(), atlas.rules_.end(), [&](const RewriteRule& r) {
        return r.src == p && r.da == da && r.db == db && r.dst == d;
      });
      if (!found) {
        throw Error(ErrorCode::MetadataInconsistent,
                    "sigma entry " + e.peak + " -> " + e.edge + " has no matching rule");
      }
      out.emplace_back(p, d);
    }
  };
  check_sigma(spec.sigma_plus, 1, 0, atlas.sigma_plus_);
  check_sigma(spec.sigma_minus, 0, 1, atlas.sigma_minus_);
  return atlas;
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

AtlasSpec twist_even_spec(int n, std::vector<int> sp, std::vector<int> sm) {
  if (n < 2) throw Error(ErrorCode::UnsupportedKind, "twist-even atlas needs n >= 2");
  const int l = (n * n + 1) / 2;
  const int k = (n + 1) / 2;
  auto default_map = [&](std::vector<int>& m) {
    if (m.empty()) {
      for (int i = 1; i <= l; ++i) m.push_back(((i - 1) % k) + 1);
    }
    if (static_cast<int>(m.size()) != l) {
      throw Error(ErrorCode::MetadataInconsistent, "sigma map must have one entry per peak");
    }
    for (int v : m) {
      if (v < 1 || v > k) throw Error(ErrorCode::MetadataInconsistent, "sigma value out of range");
    }
  };
  default_map(sp);
  default_map(sm);

  AtlasSpec spec;
  spec.name = "twist-even-" + std::to_string(n);
  spec.family = "twist-even";
  for (int i = 1; i <= l; ++i) spec.generators.push_back({"P" + std::to_string(i), "P" + std::to_string(i), 0, 1});
  for (int j = 1; j <= k; ++j) spec.generators.push_back({"R" + std::to_string(j), "R" + std::to_string(j), 1, 0});
  for (int j = 1; j <= k; ++j) spec.generators.push_back({"L" + std::to_string(j), "L" + std::to_string(j), -1, 0});
  for (int i = 1; i <= l; ++i) {
    const std::string p = "P" + std::to_string(i);
    const std::string r = "R" + std::to_string(sp[i - 1]);
    const std::string lft = "L" + std::to_string(sm[i - 1]);
    spec.rules.push_back({p, 1, 0, r});
    spec.rules.push_back({p, 0, 1, lft});
    spec.sigma_plus.push_back({p, r});
    spec.sigma_minus.push_back({p, lft});
  }
  for (int j = 1; j <= k; ++j) {
    spec.rules.push_back({"R" + std::to_string(j), 0, 1, "generic"});
    spec.rules.push_back({"L" + std::to_string(j), 1, 0, "generic"});
  }
  spec.tbb = 1;
  spec.width_ceiling = 1;
  spec.uniformly_thick = true;
  std::vector<std::string> edges;
  for (int j = 1; j <= k; ++j) edges.push_back("R" + std::to_string(j));
  for (int j = 1; j <= k; ++j) edges.push_back("L" + std::to_string(j));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) spec.surgery_distinct.push_back({edges[i], edges[j], Tri::Yes});
  }
  return spec;
}

}  // namespace

KnotAtlas builtin_atlas(BuiltinKind kind, int n, std::vector<int> sigma_plus,
                        std::vector<int> sigma_minus) {
  switch (kind) {
    case BuiltinKind::Unknot: {
      AtlasSpec spec;
      spec.name = "unknot";
      spec.family = "unknot";
      spec.generators = {{"U", "U", 0, -1}};
      spec.rules = {{"U", 1, 0, "generic"}, {"U", 0, 1, "generic"}};
      spec.tbb = -1;
      spec.width_ceiling = -1;
      spec.uniformly_thick = false;
      return make_atlas(spec);
    }
    case BuiltinKind::TwistEven:
      return make_atlas(twist_even_spec(n, std::move(sigma_plus), std::move(sigma_minus)));
    case BuiltinKind::KMinus5: {
      AtlasSpec spec;
      spec.name = "k-minus-5";
      spec.family = "k-minus-5";
      spec.generators = {{"A", "A", 0, -3}, {"B", "B", 0, -3}};
      spec.rules = {{"A", 1, 0, "generic"}, {"A", 0, 1, "generic"},
                    {"B", 1, 0, "generic"}, {"B", 0, 1, "generic"}};
      spec.tbb = -3;
      spec.width_ceiling = -3;
      spec.uniformly_thick = true;
      return make_atlas(spec);
    }
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown builtin atlas kind");
}

bool is_builtin_name(const std::string& name) {
  if (name == "unknot" || name == "k-minus-5") return true;
  const std::string prefix = "twist-even-";
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
  const std::string digits = name.substr(prefix.size());
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return false;
  }
  return std::stoi(digits) >= 2;
}

KnotAtlas builtin_atlas(const std::string& name) {
  if (name == "unknot") return builtin_atlas(BuiltinKind::Unknot);
  if (name == "k-minus-5") return builtin_atlas(BuiltinKind::KMinus5);
  if (is_builtin_name(name)) {
    return builtin_atlas(BuiltinKind::TwistEven, std::stoi(name.substr(11)));
  }
  throw Error(ErrorCode::UnsupportedKind, "no builtin atlas named '" + name + "'");
}

std::vector<KnotAtlas> builtin_atlases() {
  return {builtin_atlas(BuiltinKind::Unknot), builtin_atlas(BuiltinKind::TwistEven, 2),
          builtin_atlas(BuiltinKind::TwistEven, 3), builtin_atlas(BuiltinKind::TwistEven, 4),
          builtin_atlas(BuiltinKind::KMinus5)};
}

// ---------------------------------------------------------------------------
// Operations

RotTb invariants(const KnotAtlas& atlas, const LegClass& c) {
  if (c.generic) return c.inv;
  const RotTb g = atlas.generator(c.gen).rot_tb;
  return {g.rot + c.a - c.b, g.tb - c.a - c.b};
}

LegClass normalize(const KnotAtlas& atlas, const LegClass& c) {
  if (c.generic) return c;
  atlas.generator(c.gen);
  LegClass cur = c;
  // every rule strictly lowers a+b, so this terminates
  for (;;) {
    const RewriteRule* hit = nullptr;
    for (const auto& r : atlas.rules()) {
      if (r.src == cur.gen && cur.a >= r.da && cur.b >= r.db) {
        hit = &r;
        break;
      }
    }
    if (!hit) return cur;
    if (hit->to_generic()) return LegClass::generic_at(invariants(atlas, cur));
    cur = LegClass::named(hit->dst, cur.a - hit->da, cur.b - hit->db);
  }
}

LegClass stabilize(const KnotAtlas& atlas, const LegClass& c, Sign sign, int count) {
  if (count < 0) throw Error(ErrorCode::BadIndex, "stabilization count must be nonnegative");
  return sign == Sign::Plus ? stabilize(atlas, c, count, 0) : stabilize(atlas, c, 0, count);
}

LegClass stabilize(const KnotAtlas& atlas, const LegClass& c, int a, int b) {
  LegClass out = c;
  if (out.generic) {
    out.inv.rot += a - b;
    out.inv.tb -= a + b;
    return out;
  }
  out.a += a;
  out.b += b;
  return normalize(atlas, out);
}

bool is_equal(const KnotAtlas& atlas, const LegClass& c1, const LegClass& c2) {
  return normalize(atlas, c1) == normalize(atlas, c2);
}

std::vector<int> peaks(const KnotAtlas& atlas) {
  std::vector<bool> target(atlas.generators().size(), false);
  for (const auto& r : atlas.rules()) {
    if (!r.to_generic()) target[static_cast<std::size_t>(r.dst)] = true;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!target[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<LegClass> enumerate_classes(const KnotAtlas& atlas, int tb_min) {
  std::set<LegClass> seen;
  for (std::size_t g = 0; g < atlas.generators().size(); ++g) {
    const int depth = atlas.generators()[g].rot_tb.tb - tb_min;
    for (int a = 0; a <= depth; ++a) {
      for (int b = 0; a + b <= depth; ++b) {
        seen.insert(normalize(atlas, LegClass::named(static_cast<int>(g), a, b)));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<LegClass> classes_at(const KnotAtlas& atlas, int tb) {
  std::vector<LegClass> out;
  for (const auto& c : enumerate_classes(atlas, tb)) {
    if (invariants(atlas, c).tb == tb) out.push_back(c);
  }
  return out;
}

MountainRange mountain_range(const KnotAtlas& atlas, int tb_min) {
  if (tb_min > atlas.tbb()) {
    throw Error(ErrorCode::CutoffAbovePeak, "tb cutoff " + std::to_string(tb_min) + " above tbb " +
                                                std::to_string(atlas.tbb()));
  }
  MountainRange mr(tb_min, true);
  for (const auto& c : enumerate_classes(atlas, tb_min)) mr.add(invariants(atlas, c), label(atlas, c));
  return mr;
}

std::string label(const KnotAtlas& atlas, const LegClass& c) {
  if (c.generic) return "G(" + std::to_string(c.inv.rot) + "," + std::to_string(c.inv.tb) + ")";
  std::string s = atlas.generator(c.gen).name;
  if (c.a || c.b) s += "[" + std::to_string(c.a) + "," + std::to_string(c.b) + "]";
  return s;
}

}  // namespace legcable

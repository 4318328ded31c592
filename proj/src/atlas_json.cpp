#include "legcable/atlas_json.hpp"

#include <fstream>
#include <sstream>

namespace legcable {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

std::vector<SigmaSpec> sigma_from_json(const json& j, const char* key) {
  std::vector<SigmaSpec> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) out.push_back({field<std::string>(e, "peak"), field<std::string>(e, "edge")});
  return out;
}

}  // namespace

json atlas_to_json(const KnotAtlas& atlas) {
  const AtlasSpec spec = atlas.to_spec();
  json j;
  j["name"] = spec.name;
  if (!spec.family.empty()) j["family"] = spec.family;
  j["generators"] = json::array();
  for (const auto& g : spec.generators) {
    j["generators"].push_back({{"id", g.id}, {"name", g.name}, {"rot", g.rot}, {"tb", g.tb}});
  }
  j["rules"] = json::array();
  for (const auto& r : spec.rules) {
    j["rules"].push_back({{"src", r.src}, {"da", r.da}, {"db", r.db}, {"dst", r.dst}});
  }
  j["tbb"] = spec.tbb;
  j["width_ceiling"] = spec.width_ceiling;
  j["uniformly_thick"] = spec.uniformly_thick;
  j["surgery_distinct"] = json::array();
  for (const auto& s : spec.surgery_distinct) {
    j["surgery_distinct"].push_back({{"a", s.a}, {"b", s.b}, {"value", to_string(s.value)}});
  }
  j["sigma_plus"] = json::array();
  for (const auto& s : spec.sigma_plus) j["sigma_plus"].push_back({{"peak", s.peak}, {"edge", s.edge}});
  j["sigma_minus"] = json::array();
  for (const auto& s : spec.sigma_minus) j["sigma_minus"].push_back({{"peak", s.peak}, {"edge", s.edge}});
  return j;
}

KnotAtlas atlas_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "atlas must be a JSON object");
  AtlasSpec spec;
  spec.name = field<std::string>(j, "name");
  if (j.contains("family")) spec.family = field<std::string>(j, "family");
  for (const auto& g : field<json>(j, "generators")) {
    GeneratorSpec gs{field<std::string>(g, "id"), {}, field<int>(g, "rot"), field<int>(g, "tb")};
    gs.name = g.contains("name") ? field<std::string>(g, "name") : gs.id;
    spec.generators.push_back(gs);
  }
  for (const auto& r : field<json>(j, "rules")) {
    spec.rules.push_back({field<std::string>(r, "src"), field<int>(r, "da"), field<int>(r, "db"),
                          field<std::string>(r, "dst")});
  }
  spec.tbb = field<int>(j, "tbb");
  spec.width_ceiling = field<int>(j, "width_ceiling");
  spec.uniformly_thick = field<bool>(j, "uniformly_thick");
  if (j.contains("surgery_distinct")) {
    for (const auto& s : j.at("surgery_distinct")) {
      spec.surgery_distinct.push_back({field<std::string>(s, "a"), field<std::string>(s, "b"),
                                       tri_from_string(field<std::string>(s, "value"))});
    }
  }
  spec.sigma_plus = sigma_from_json(j, "sigma_plus");
  spec.sigma_minus = sigma_from_json(j, "sigma_minus");
  return make_atlas(spec);
}

std::string dump_atlas(const KnotAtlas& atlas) { return atlas_to_json(atlas).dump(2); }

KnotAtlas parse_atlas(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return atlas_from_json(j);
}

KnotAtlas load_atlas(const std::string& name_or_path) {
  if (is_builtin_name(name_or_path)) return builtin_atlas(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open atlas file '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_atlas(ss.str());
}

json leg_class_to_json(const KnotAtlas& atlas, const LegClass& c) {
  if (c.generic) return {{"kind", "generic"}, {"rot", c.inv.rot}, {"tb", c.inv.tb}};
  return {{"kind", "named"}, {"gen", atlas.generator(c.gen).id}, {"a", c.a}, {"b", c.b}};
}

LegClass leg_class_from_json(const KnotAtlas& atlas, const json& j) {
  const auto kind = j.contains("kind") ? field<std::string>(j, "kind") : std::string("named");
  if (kind == "generic") {
    const RotTb inv{field<int>(j, "rot"), field<int>(j, "tb")};
    if (!is_odd(inv.rot + inv.tb)) throw Error(ErrorCode::ParityViolation, "generic class with even rot+tb");
    return LegClass::generic_at(inv);
  }
  if (kind != "named") throw Error(ErrorCode::ParseError, "class kind must be named|generic");
  const int a = j.contains("a") ? field<int>(j, "a") : 0;
  const int b = j.contains("b") ? field<int>(j, "b") : 0;
  if (a < 0 || b < 0) throw Error(ErrorCode::ParseError, "stabilization counts must be nonnegative");
  return LegClass::named(atlas.index_of(field<std::string>(j, "gen")), a, b);
}

}  // namespace legcable

#include "legcable/links_json.hpp"

#include "legcable/atlas_json.hpp"

namespace legcable {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string("link field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

StabVec vec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "vec must be an array of [a,b] pairs");
  StabVec out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "vec entries must be [a,b] integer pairs");
    }
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace

json link_to_json(const KnotAtlas& atlas, const Link& l) {
  json j;
  j["atlas"] = atlas.name();
  j["regime"] = to_string(l.regime);
  j["form"] = to_string(l.form);
  j["p"] = l.p;
  j["q"] = l.q;
  j["n"] = l.n;
  j["base"] = leg_class_to_json(atlas, l.base);
  if (l.form == LinkForm::Twisted) j["t"] = l.t;
  if (l.form == LinkForm::TorusDivide) j["sign"] = to_string(l.sign);
  j["vec"] = json::array();
  for (const auto& s : l.vec) j["vec"].push_back({s.a, s.b});
  return j;
}

Link link_from_json(const KnotAtlas& atlas, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "link must be a JSON object");
  if (j.contains("atlas")) {
    const json& a = j.at("atlas");
    if (a.is_string() && a.get<std::string>() != atlas.name()) {
      throw Error(ErrorCode::KindMismatch, "link refers to atlas '" + a.get<std::string>() + "', loaded '" +
                                               atlas.name() + "'");
    }
    if (a.is_object() && atlas_to_json(atlas_from_json(a)) != atlas_to_json(atlas)) {
      throw Error(ErrorCode::KindMismatch, "inline atlas differs from the loaded atlas");
    }
  }
  Link l;
  l.p = int_field(j, "p");
  l.q = int_field(j, "q");
  l.n = int_field(j, "n");
  if (!j.contains("base")) throw Error(ErrorCode::ParseError, "link needs a base class");
  l.base = normalize(atlas, leg_class_from_json(atlas, j.at("base")));
  l.regime = j.contains("regime") ? regime_from_string(j.at("regime").get<std::string>()) : regime(atlas, l.p, l.q);
  if (j.contains("form")) {
    l.form = link_form_from_string(j.at("form").get<std::string>());
  } else {
    switch (l.regime) {
      case Regime::Greater: l.form = LinkForm::Cable; break;
      case Regime::IntegerLesser: l.form = LinkForm::Twisted; break;
      default: l.form = LinkForm::TorusDivide; break;
    }
  }
  if (j.contains("t")) l.t = int_field(j, "t");
  if (j.contains("sign")) {
    const auto s = j.at("sign").get<std::string>();
    if (s != "+" && s != "-") throw Error(ErrorCode::ParseError, "sign must be \"+\" or \"-\"");
    l.sign = s == "+" ? Sign::Plus : Sign::Minus;
  }
  l.vec = j.contains("vec") ? vec_from_json(j.at("vec")) : StabVec{};
  if (l.vec.empty() && l.n >= 1) l.vec.assign(static_cast<std::size_t>(l.n), StabPair{});
  validate_link(atlas, l);
  return l;
}

Link parse_link(const KnotAtlas& atlas, const std::string& text) { return link_from_json(atlas, parse_text(text)); }

StabVec parse_stab_vec(const std::string& text) { return vec_from_json(parse_text(text)); }

json verdict_to_json(const Verdict& v) {
  json j;
  j["verdict"] = to_string(v.kind);
  j["reason"] = v.reason;
  j["witness"] = v.witness;
  return j;
}

}  // namespace legcable

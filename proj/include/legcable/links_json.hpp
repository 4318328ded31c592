#pragma once

#include <string>

#include "json.hpp"
#include "legcable/links.hpp"

namespace legcable {

nlohmann::json link_to_json(const KnotAtlas& atlas, const Link& link);
/// Reads a link document against `atlas`. A string "atlas" field must name
/// the same atlas; an inline atlas object must serialize identically.
Link link_from_json(const KnotAtlas& atlas, const nlohmann::json& j);
Link parse_link(const KnotAtlas& atlas, const std::string& text);

/// Parses "[[a,b],...]".
StabVec parse_stab_vec(const std::string& text);

nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace legcable

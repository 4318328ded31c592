#pragma once

#include <string>

#include "json.hpp"
#include "legcable/atlas.hpp"

namespace legcable {

nlohmann::json atlas_to_json(const KnotAtlas& atlas);
/// Throws ParseError on malformed input, plus every make_atlas error.
KnotAtlas atlas_from_json(const nlohmann::json& j);

std::string dump_atlas(const KnotAtlas& atlas);
KnotAtlas parse_atlas(const std::string& text);

/// Builtin name or path to a JSON file.
KnotAtlas load_atlas(const std::string& name_or_path);

nlohmann::json leg_class_to_json(const KnotAtlas& atlas, const LegClass& c);
LegClass leg_class_from_json(const KnotAtlas& atlas, const nlohmann::json& j);

}  // namespace legcable

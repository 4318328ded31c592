#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legcable/mountain.hpp"

namespace legcable {

struct OverlayPolygon {
  std::string label;
  std::vector<RotTb> points;
};

struct Overlay {
  std::vector<std::pair<std::string, RotTb>> corners;
  std::vector<OverlayPolygon> polygons;
};

/// Corner points and stabilization cones of the (p,q) lesser range over a
/// twist knot whose peak classes are pairwise surgery-distinct. Cones are
/// cut off at tb_min.
Overlay ifsurg_overlay(int p, int q, int tb_min);

/// One row per tb (descending), one column per rot; throws EmptyRange.
std::string ascii_mountain(const MountainRange& mr);

/// SVG with one circle per entry carrying data-rot, data-tb and data-mult.
std::string svg_mountain(const MountainRange& mr, const std::optional<Overlay>& overlay = std::nullopt);

/// Recovers the marker entries of a document produced by svg_mountain.
MountainRange parse_svg_markers(const std::string& svg);

}  // namespace legcable

#include <gtest/gtest.h>

#include <sstream>

#include "legcable/cables.hpp"
#include "legcable/render.hpp"

using namespace legcable;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Render, AsciiRows) {
  const auto rows = lines(ascii_mountain(mountain_range(builtin_atlas(BuiltinKind::TwistEven, 2), -2)));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], " 1 | . . . 2 . . .");
  EXPECT_EQ(rows[1], " 0 | . . 1 . 1 . .");
  EXPECT_EQ(rows[3], "-2 | 1 . 1 . 1 . 1");
  EXPECT_NE(rows[4].find("⋮"), std::string::npos);
}

TEST(Render, AsciiWithoutTruncation) {
  MountainRange m(-1, false);
  m.add({0, -1});
  EXPECT_EQ(ascii_mountain(m), "-1 | 1\n");
}

TEST(Render, EmptyRangeThrows) {
  try {
    ascii_mountain(MountainRange(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyRange);
  }
  EXPECT_THROW(svg_mountain(MountainRange(0)), Error);
}

TEST(Render, SvgRoundTrip) {
  for (const KnotAtlas& atlas : builtin_atlases()) {
    const MountainRange m = mountain_range(atlas, atlas.tbb() - 4);
    const std::string svg = svg_mountain(m);
    const MountainRange back = parse_svg_markers(svg);
    EXPECT_EQ(back, m) << atlas.name();
    EXPECT_TRUE(back.truncated());
    EXPECT_EQ(svg, svg_mountain(m));
  }
}

TEST(Render, OverlayCorners) {
  const Overlay o = ifsurg_overlay(2, 1, -4);
  ASSERT_EQ(o.corners.size(), 6u);
  EXPECT_EQ(o.corners[0].second, (RotTb{1, 2}));
  EXPECT_EQ(o.polygons.size(), 3u);
  const KnotAtlas t = builtin_atlas(BuiltinKind::TwistEven, 2).with_peak_surgery(Tri::Yes);
  const std::string svg = svg_mountain(lesser_mountain_range(t, 2, 1, -4), o);
  EXPECT_NE(svg.find("data-label=\"unique\""), std::string::npos);
  EXPECT_EQ(parse_svg_markers(svg), lesser_mountain_range(t, 2, 1, -4));
}

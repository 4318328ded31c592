#include "legcable/render.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace legcable {

namespace {

constexpr int kCell = 40;

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string point_text(RotTb p) { return "(" + std::to_string(p.rot) + "," + std::to_string(p.tb) + ")"; }

OverlayPolygon cone(const std::string& label, RotTb apex, int tb_min) {
  const int h = std::max(0, apex.tb - tb_min);
  return {label, {apex, {apex.rot + h, apex.tb - h}, {apex.rot - h, apex.tb - h}}};
}

}  // namespace

Overlay ifsurg_overlay(int p, int q, int tb_min) {
  Overlay o;
  o.corners = {
      {"(p-q,pq)", {p - q, p * q}},      {"(q-p,pq)", {q - p, p * q}},
      {"(p,pq-q)", {p, p * q - q}},      {"(-p,pq-q)", {-p, p * q - q}},
      {"(0,pq-p+q)", {0, p * q - p + q}}, {"(0,pq-p-q)", {0, p * q - p - q}},
  };
  o.polygons = {cone("k-region+", {p, p * q - q}, tb_min), cone("k-region-", {-p, p * q - q}, tb_min),
                cone("unique", {0, p * q - p - q}, tb_min)};
  return o;
}

std::string ascii_mountain(const MountainRange& mr) {
  if (mr.empty()) throw Error(ErrorCode::EmptyRange, "nothing to render");
  const int r = mr.max_abs_rot();
  const int top = mr.tb_max();
  const int bottom = mr.tb_min();
  std::size_t cell = 1;
  for (const auto& [pt, m] : mr.entries()) cell = std::max(cell, std::to_string(m).size());
  std::size_t label = 0;
  for (int tb = top; tb >= bottom; --tb) label = std::max(label, std::to_string(tb).size());

  std::ostringstream out;
  for (int tb = top; tb >= bottom; --tb) {
    out << pad_left(std::to_string(tb), label) << " |";
    for (int rot = -r; rot <= r; ++rot) {
      const int m = mr.multiplicity({rot, tb});
      out << ' ' << pad_left(m ? std::to_string(m) : ".", cell);
    }
    out << '\n';
  }
  if (mr.truncated()) {
    std::string row = std::string(label, ' ') + "  ";
    for (int rot = -r; rot <= r; ++rot) {
      row += ' ' + pad_left(mr.multiplicity({rot, bottom}) ? "⋮" : " ", cell);
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  return out.str();
}

std::string svg_mountain(const MountainRange& mr, const std::optional<Overlay>& overlay) {
  if (mr.empty()) throw Error(ErrorCode::EmptyRange, "nothing to render");
  int rot_lo = 0, rot_hi = 0, tb_lo = mr.tb_min(), tb_hi = mr.tb_max();
  auto include = [&](RotTb p) {
    rot_lo = std::min(rot_lo, p.rot);
    rot_hi = std::max(rot_hi, p.rot);
    tb_lo = std::min(tb_lo, p.tb);
    tb_hi = std::max(tb_hi, p.tb);
  };
  for (const auto& [pt, m] : mr.entries()) include(pt);
  if (overlay) {
    for (const auto& [name, pt] : overlay->corners) include(pt);
  }
  auto x = [&](int rot) { return (rot - rot_lo + 1) * kCell; };
  auto y = [&](int tb) { return (tb_hi - tb + 1) * kCell; };
  const int width = (rot_hi - rot_lo + 2) * kCell;
  const int height = (tb_hi - tb_lo + 2) * kCell;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << x(0) << "\" y1=\"" << kCell / 2 << "\" x2=\"" << x(0) << "\" y2=\"" << height - kCell / 2
      << "\"/>\n";
  for (int tb = tb_hi; tb >= tb_lo; --tb) {
    out << "<line x1=\"" << kCell / 2 << "\" y1=\"" << y(tb) << "\" x2=\"" << width - kCell / 2 << "\" y2=\"" << y(tb)
        << "\"/>\n";
  }
  out << "</g>\n";
  if (overlay) {
    out << "<g class=\"overlay\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"1.5\">\n";
    for (const auto& poly : overlay->polygons) {
      out << "<polygon data-label=\"" << poly.label << "\" points=\"";
      for (std::size_t i = 0; i < poly.points.size(); ++i) {
        out << (i ? " " : "") << x(poly.points[i].rot) << ',' << y(poly.points[i].tb);
      }
      out << "\"/>\n";
    }
    for (const auto& [name, pt] : overlay->corners) {
      out << "<text class=\"corner\" data-label=\"" << name << "\" x=\"" << x(pt.rot) + 8 << "\" y=\"" << y(pt.tb) - 8
          << "\" font-size=\"10\">" << point_text(pt) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "<g class=\"markers\">\n";
  for (const auto& [pt, m] : mr.entries()) {
    out << "<circle cx=\"" << x(pt.rot) << "\" cy=\"" << y(pt.tb) << "\" r=\"9\" fill=\"#ffffff\" stroke=\"#000000\" data-rot=\""
        << pt.rot << "\" data-tb=\"" << pt.tb << "\" data-mult=\"" << m << "\"/>\n";
    out << "<text x=\"" << x(pt.rot) << "\" y=\"" << y(pt.tb) + 4 << "\" font-size=\"11\" text-anchor=\"middle\">" << m
        << "</text>\n";
  }
  out << "</g>\n";
  if (mr.truncated()) {
    out << "<text class=\"continuation\" x=\"" << x(0) << "\" y=\"" << height - 6
        << "\" font-size=\"12\" text-anchor=\"middle\">⋮</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

MountainRange parse_svg_markers(const std::string& svg) {
  static const std::regex marker(R"re(<circle[^>]*data-rot="(-?\d+)" data-tb="(-?\d+)" data-mult="(\d+)")re");
  MountainRange mr;
  int tb_min = 0;
  bool first = true;
  std::vector<std::pair<RotTb, int>> found;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), marker); it != std::sregex_iterator(); ++it) {
    const RotTb pt{std::stoi((*it)[1]), std::stoi((*it)[2])};
    found.emplace_back(pt, std::stoi((*it)[3]));
    tb_min = first ? pt.tb : std::min(tb_min, pt.tb);
    first = false;
  }
  mr = MountainRange(tb_min, svg.find("class=\"continuation\"") != std::string::npos);
  for (const auto& [pt, m] : found) mr.set_multiplicity(pt, m);
  return mr;
}

}  // namespace legcable

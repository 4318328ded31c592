#include "legcable/mountain.hpp"

#include <algorithm>
#include <cstdlib>

namespace legcable {

void MountainRange::add(RotTb point, const std::string& label) {
  if (!is_odd(point.rot + point.tb)) {
    throw Error(ErrorCode::ParityViolation,
                "mountain range point (" + std::to_string(point.rot) + "," +
                    std::to_string(point.tb) + ") has even rot+tb");
  }
  ++entries_[point];
  if (!label.empty()) {
    auto& v = labels_[point];
    v.insert(std::upper_bound(v.begin(), v.end(), label), label);
  }
}

void MountainRange::set_multiplicity(RotTb point, int mult) {
  if (!is_odd(point.rot + point.tb)) {
    throw Error(ErrorCode::ParityViolation, "mountain range point has even rot+tb");
  }
  if (mult <= 0) {
    entries_.erase(point);
    return;
  }
  entries_[point] = mult;
}

int MountainRange::multiplicity(RotTb point) const {
  auto it = entries_.find(point);
  return it == entries_.end() ? 0 : it->second;
}

int MountainRange::tb_max() const {
  int best = tb_min_;
  for (const auto& [pt, m] : entries_) best = std::max(best, pt.tb);
  return best;
}

int MountainRange::max_abs_rot() const {
  int best = 0;
  for (const auto& [pt, m] : entries_) best = std::max(best, std::abs(pt.rot));
  return best;
}

std::vector<std::pair<int, int>> MountainRange::row(int tb) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [pt, m] : entries_) {
    if (pt.tb == tb) out.emplace_back(pt.rot, m);
  }
  return out;
}

}  // namespace legcable

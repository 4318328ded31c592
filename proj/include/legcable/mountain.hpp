#pragma once

#include <map>
#include <string>
#include <vector>

#include "legcable/types.hpp"

namespace legcable {

/// Lattice points (rot, tb) decorated with the number of isotopy classes
/// realizing them, cut off below tb_min.
class MountainRange {
 public:
  MountainRange() = default;
  explicit MountainRange(int tb_min, bool truncated = true)
      : tb_min_(tb_min), truncated_(truncated) {}

  /// Adds one class at `point`. Throws ParityViolation when rot + tb is even.
  void add(RotTb point, const std::string& label = {});
  void set_multiplicity(RotTb point, int mult);

  int multiplicity(RotTb point) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const std::map<RotTb, int>& entries() const { return entries_; }
  const std::map<RotTb, std::vector<std::string>>& labels() const { return labels_; }
  int tb_min() const { return tb_min_; }
  bool truncated() const { return truncated_; }
  int tb_max() const;
  int max_abs_rot() const;

  /// Points of a single tb row, rot ascending.
  std::vector<std::pair<int, int>> row(int tb) const;

  bool operator==(const MountainRange& other) const { return entries_ == other.entries_; }

 private:
  std::map<RotTb, int> entries_;
  std::map<RotTb, std::vector<std::string>> labels_;
  int tb_min_ = 0;
  bool truncated_ = true;
};

}  // namespace legcable

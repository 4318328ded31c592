#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace legcable {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

constexpr int kCriterionCount = 10;
constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs one acceptance criterion (1..kCriterionCount).
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// "[PASS] 3 name: detail"
std::string format_result(const CriterionResult& r);

}  // namespace legcable

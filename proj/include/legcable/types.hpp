#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace legcable {

enum class ErrorCode {
  DuplicateId,
  InvariantMismatch,
  ParityViolation,
  MetadataInconsistent,
  UnsupportedKind,
  UnknownGenerator,
  CutoffAbovePeak,
  NotReduced,
  WrongRegime,
  WrongWindow,
  SlopeMismatch,
  LengthMismatch,
  BadIndex,
  RegimeMismatch,
  NotAPermutation,
  KindMismatch,
  BudgetExceeded,
  EmptyRange,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Classical invariants of a Legendrian knot.
struct RotTb {
  int rot = 0;
  int tb = 0;

  auto operator<=>(const RotTb&) const = default;
};

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// Per-component stabilization counts: a positive, b negative.
struct StabPair {
  int a = 0;
  int b = 0;

  auto operator<=>(const StabPair&) const = default;
};

using StabVec = std::vector<StabPair>;

/// Three-valued answer of every isotopy question.
struct Verdict {
  enum class Kind { Isotopic, NotIsotopic, Unknown };

  Kind kind = Kind::Unknown;
  std::string reason;
  std::vector<std::string> witness;

  static Verdict isotopic(std::string why, std::vector<std::string> w = {}) {
    return {Kind::Isotopic, std::move(why), std::move(w)};
  }
  static Verdict not_isotopic(std::string why, std::vector<std::string> w = {}) {
    return {Kind::NotIsotopic, std::move(why), std::move(w)};
  }
  static Verdict unknown(std::string why, std::vector<std::string> w = {}) {
    return {Kind::Unknown, std::move(why), std::move(w)};
  }

  bool is_isotopic() const { return kind == Kind::Isotopic; }
  bool is_not_isotopic() const { return kind == Kind::NotIsotopic; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

const char* to_string(Verdict::Kind k);

inline bool is_odd(int x) { return (x % 2) != 0; }

inline int ceil_div(int num, int den) {
  // den > 0
  int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

inline int floor_div(int num, int den) {
  int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

}  // namespace legcable

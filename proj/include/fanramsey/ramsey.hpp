#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fanramsey/graph.hpp"

namespace fanramsey {

struct Claim {
  std::string property;
  bool holds = false;
  nlohmann::json certificate;  // counterexample when the claim fails
};

/// Checked properties of a coloring and the Ramsey lower bound they imply.
struct WitnessReport {
  int N = 0;
  std::vector<Claim> claims;
  std::optional<std::string> bound_implied;  // set only if every claim holds
  std::optional<int> bound_value;            // R(...) >= bound_value

  bool all_hold() const;
};

/// Claims: "no blue K_{1,m}", "red min degree >= N-m", "no red F_n".
/// On success certifies R(K_{1,m}, F_n) >= N + 1.
WitnessReport verify_star_fan_witness(const TwoColoring& k, int m, int n);

/// Claims: "no red F_n", "no blue F_n". On success certifies R(F_n) >= N + 1.
WitnessReport verify_fan_fan_witness(const TwoColoring& k, int n);

enum class FormulaRegime { SmallStar, Middle, LargeStar };

const char* to_string(FormulaRegime r);

struct FormulaResult {
  FormulaRegime regime = FormulaRegime::SmallStar;
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;  // false: value known only within an additive constant
};

/// R(K_{1,m}, F_n): m <= n exact m + 2n - (1 + (-1)^m)/2; n < m < n(n-1)
/// strictly between (3m + sqrt(m^2+8n^2))/2 - 8 and that + 9; m >= n(n-1)
/// exact 2m + 1.
FormulaResult star_fan_formula(int m, int n);

struct FanRamseyBounds {
  double lower = 0.0;  // (3 + sqrt 3) n - 8, strict
  double upper = 0.0;  // (5 + eps) n
  double epsilon = 0.0;
  double gate = 0.0;  // 384 / eps^2
  bool upper_valid = false;  // n >= gate
};

FanRamseyBounds fan_ramsey_bounds(int n, double epsilon);

/// A forbidden monochromatic pattern for the exhaustive search.
struct Target {
  enum class Kind { Star, Fan };
  Kind kind = Kind::Fan;
  int size = 1;  // m for K_{1,m}, n for F_n

  static Target star(int m) { return {Kind::Star, m}; }
  static Target fan(int n) { return {Kind::Fan, n}; }
  std::string name() const;
  friend bool operator==(const Target&, const Target&) = default;
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchResult {
  bool exact = false;
  int value = 0;  // exact R, or (when !exact) the proven lower bound cap + 1
  std::optional<TwoColoring> witness;  // avoiding coloring on value - 1 vertices
  long long nodes = 0;                 // partial colorings visited
};

inline constexpr int kFanFanCap = 8;
inline constexpr int kStarFanCap = 9;

/// Smallest N such that every 2-coloring of K_N has `blue_target` in blue or
/// `red_target` in red, searched for N <= cap. Returns ">= cap + 1" (exact =
/// false) if K_cap still admits an avoiding coloring. Throws CapExceeded
/// when cap is above the limit for the pair. Result does not depend on
/// `workers`.
SearchResult brute_force_ramsey(Target blue_target, Target red_target, int cap, int workers = 1);

/// Whether K_N has a coloring avoiding both targets; returns one if so.
std::optional<TwoColoring> find_avoiding_coloring(Target blue_target, Target red_target, int N, int workers = 1,
                                                  long long* nodes = nullptr);

nlohmann::json to_json(const WitnessReport& r);

}  // namespace fanramsey

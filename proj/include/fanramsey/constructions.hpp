#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fanramsey/bigraphic.hpp"
#include "fanramsey/graph.hpp"

namespace fanramsey {

/// Parameters outside the range where a construction is defined (e.g. the
/// derived block size b is not positive). Distinct from internal failures.
class UnsupportedRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Half-open vertex range [first, first + size).
struct Block {
  Vertex first = 0;
  int size = 0;

  bool contains(Vertex v) const { return v >= first && v < first + size; }
};

/// Derived quantities of the star-vs-fan lower-bound coloring. Vertex layout
/// is X1, X2, Y1, Y2 in that order.
struct ConstructionParams {
  int m = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  int sigma = 0;
  int N = 0;
  Block x1, x2, y1, y2;
  /// (3m + sqrt(m^2 + 8n^2)) / 2 - 8, the bound the coloring certifies beating.
  double claimed_bound = 0.0;
};

// floor((m + sqrt(m^2 + 8n^2)) / 2 - n) - 1 and floor(n - (sqrt(m^2 + 8n^2) - m) / 4) - 1,
// evaluated in exact integer arithmetic.
int star_fan_a(int m, int n);
int star_fan_b(int m, int n);

/// Throws UnsupportedRange unless m > n >= 2 and a, b >= 1.
ConstructionParams star_fan_params(int m, int n);

/// Same layout with m = 2n, a = floor(sqrt(3) n) - 1, b = floor((3 - sqrt(3)) n / 2) - 1
/// and sigma fixed at 3.
ConstructionParams star_fan_special_params(int n);

struct StarFanConstruction {
  TwoColoring coloring;
  ConstructionParams params;
  IntervalRealization x1_y1;  // the X_i - Y_i red bipartite graph (same for i = 2)
};

/// Red: all of X1-X2, X1-Y2, X2-Y1, plus an interval realization between
/// X_i and Y_i. Everything else blue. Before returning, checks red minimum
/// degree >= N - m and the absence of a red F_n; a failure there is a
/// std::logic_error.
StarFanConstruction star_fan_lower(int m, int n);
StarFanConstruction star_fan_lower_special(int n);

/// Two red K_{2n} joined by blue edges, on 4n vertices.
TwoColoring chromatic_lower(int n);

enum class TuranRegime {
  BipartitePlusCliques,  // k/n <= 1/4
  Tripartite,            // 1/4 < k/n <= 1/3
  NearRegular,           // k/n > 1/3
};

const char* to_string(TuranRegime r);

struct TuranConstruction {
  Graph graph;
  TuranRegime regime;
  std::vector<int> part_sizes;  // tripartite regime only
};

/// F_k-free graph on n vertices from the extremal-number discussion. Throws
/// UnsupportedRange unless 1 <= k < n/2. Verified F_k-free before returning.
TuranConstruction turan_lower(int n, int k);

/// ex(n, F_k) for small k: floor(n^2/4) + k^2 - k (k odd) or k^2 - 3k/2 (k even).
long long efgg_extremal_number(int n, int k);

struct DiracThreshold {
  int case_label = 0;  // 1: k < sqrt(n); 2: sqrt(n) <= k < n/3; 3: n/3 <= k < n/2
  double value = 0.0;
  bool constant_unresolved = false;  // case 2 holds only up to an additive Theta(1)
  double alpha = 0.0;
};

/// Minimum degree forcing F_k in an n-vertex graph. Requires 2k + 1 <= n.
DiracThreshold dirac_threshold(int n, int k);

}  // namespace fanramsey

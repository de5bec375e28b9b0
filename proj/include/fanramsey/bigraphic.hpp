#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fanramsey/graph.hpp"

namespace fanramsey {

/// Requested degrees for the two sides of a bipartite graph.
struct DegreePairSpec {
  std::vector<int> xs;
  std::vector<int> ys;
};

enum class BigraphicFailure {
  None,
  NegativeEntry,
  EntryTooLarge,  // some x_i > |ys| or y_j > |xs|
  SumMismatch,
  PrefixViolated,  // Gale-Ryser inequality fails at violated_k
};

const char* to_string(BigraphicFailure f);

struct BigraphicCertificate {
  bool bigraphic = false;
  BigraphicFailure failure = BigraphicFailure::None;
  int violated_k = 0;  // 1-based prefix length, for PrefixViolated
  long long lhs = 0;   // sum of the k largest x
  long long rhs = 0;   // sum_j min(y_j, k)

  explicit operator bool() const { return bigraphic; }
};

/// Gale-Ryser test.
BigraphicCertificate is_bigraphic(const DegreePairSpec& spec);

class RealizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bipartite graph with side A = vertices 0..a-1 and side B = a..a+b-1.
struct BipartiteRealization {
  Graph graph;
  int a = 0;
  int b = 0;

  bool in_a(Vertex v) const { return v < a; }
  std::vector<bool> left_mask() const;
};

/// Havel-Hakimi style construction: the largest remaining x-degree is joined
/// to the largest remaining y-degrees, ties broken by lowest vertex id.
/// Throws RealizationError (with the Gale-Ryser certificate in the message)
/// when the pair is not bigraphic.
BipartiteRealization realize_bigraphic(const DegreePairSpec& spec);

struct IntervalRealizationParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int sigma = 0;
};

/// Degree targets chosen from the excess ac - bd = q * (side) + r.
struct IntervalRealization {
  BipartiteRealization realization;
  bool a_side_reduced = true;  // false: excess negative, B side carries q/r
  long long excess = 0;        // ac - bd
  int q = 0;
  int r = 0;
  DegreePairSpec degrees;
};

/// Bipartite graph with A-degrees in [c - sigma, c] and B-degrees in
/// [d - sigma, d]. Requires -sigma*b <= ac - bd <= sigma*a.
IntervalRealization realize_interval(const IntervalRealizationParams& p);

}  // namespace fanramsey

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanramsey/graph.hpp"
#include "fanramsey/matching.hpp"

namespace fanramsey {

/// Certificate for F_k: a centre joined to every endpoint of k disjoint spokes.
struct FanWitness {
  Vertex center = -1;
  std::vector<Edge> spokes;

  int size() const { return static_cast<int>(spokes.size()); }
};

/// Structural check of a fan of size `k` in g. Returns the first problem found.
std::optional<std::string> validate_fan(const Graph& g, const FanWitness& w, int k);

/// nu(g[N(v)]), the largest fan centred at v.
int fan_size_at(const Graph& g, Vertex v);

/// A copy of F_k in g, if one exists. Exact: a vertex v centres F_k iff
/// nu(g[N(v)]) >= k. Vertices are tried in descending degree order.
std::optional<FanWitness> find_fan(const Graph& g, int k);

struct MonoFan {
  Color color;
  FanWitness witness;
};

/// Red is searched first.
std::optional<MonoFan> find_mono_fan(const TwoColoring& k, int n);

struct StarReport {
  Vertex vertex = -1;
  int degree = 0;
};

/// Vertex of largest blue degree (lowest id on ties). A blue K_{1,m} exists
/// iff the returned degree is at least m.
StarReport max_blue_star(const TwoColoring& k);

/// Number of vertices covered by a maximum matching of the complete
/// multipartite graph with the given parts. Requires at least two parts.
int multipartite_matching_bound(const MultipartiteSpec& spec);

/// A maximum matching of the complete multipartite graph whose parts are
/// the given vertex lists: repeatedly pair a vertex of the largest remaining
/// part with one of the second largest.
std::vector<Edge> multipartite_matching(std::vector<std::vector<Vertex>> parts);

/// Exhaustive search for a cycle of exactly `length` vertices.
/// Throws std::length_error above 12 vertices.
bool cycle_oracle(const Graph& g, int length);

inline constexpr int kCycleOracleLimit = 12;

enum class ExtensionCase { I, II, III };

const char* to_string(ExtensionCase c);

/// Host graph with blocks X_1..X_p, Y, Z such that X u Y spans a complete
/// multipartite graph with parts X_1..X_p, Y.
struct FanExtensionInstance {
  Graph graph;
  std::vector<std::vector<Vertex>> x_parts;
  std::vector<Vertex> y;
  std::vector<Vertex> z;
  double lambda = 1.0;
  int n = 1;

  int x_total() const;
  int q() const { return 2 * n - (x_total() + static_cast<int>(y.size())); }
};

/// Every failed hypothesis, one message per inequality.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(std::vector<std::string> failures);
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

/// Hypotheses on the instance itself (partition, multipartite structure,
/// |X_i| <= lambda, |X| + |Y| > n, lambda >= 1).
std::vector<std::string> audit_instance(const FanExtensionInstance& inst);

/// Full hypothesis audit for a case, vertex and supplied matching.
std::vector<std::string> audit_extension(const FanExtensionInstance& inst, ExtensionCase which, Vertex v,
                                         const Matching& m);

/// Builds F_n centred at v following the three-case extension argument:
/// trim m to the prescribed size, drop v's own part, and complete the fan
/// with a matching of the residual complete multipartite graph.
/// Throws PreconditionError listing each failed hypothesis.
FanWitness fan_extend(const FanExtensionInstance& inst, ExtensionCase which, Vertex v, const Matching& m);

struct FanExtension {
  FanWitness witness;
  /// False when the prescribed trim left the residual multipartite graph
  /// short and a longer prefix of the matching was used instead.
  bool proof_route = true;
};

/// As fan_extend, reporting which assembly produced the fan.
FanExtension fan_extend_detailed(const FanExtensionInstance& inst, ExtensionCase which, Vertex v, const Matching& m);

/// Maximum matching in the graph the case draws its matching from:
/// case I uses edges N(v)∩Z – (X∪Y) and inside N(v)∩Z; cases II/III use
/// N(v)∩Z – Y and inside N(v)∩Z.
Matching find_extension_matching(const FanExtensionInstance& inst, ExtensionCase which, Vertex v);

struct HighDegreeFan {
  bool applicable = false;
  Vertex trigger_vertex = -1;  // a vertex with some colour degree >= 3n
  Color trigger_color = Color::Red;
  std::optional<MonoFan> fan;  // empty only if the guarantee failed
};

/// If some vertex has >= 3n neighbours in one colour, a monochromatic F_n
/// exists. Searches inside each qualifying neighbourhood first, then globally.
HighDegreeFan high_degree_fan(const TwoColoring& k, int n);

}  // namespace fanramsey

#pragma once

#include <string>
#include <vector>

namespace bec {

// Which side of the bipartition a vertex index refers to. Inputs and
// outputs are indexed independently, each starting at 0.
enum class Side { Input, Output };

// One edge of an instance. Parallel edges are allowed and stay distinct;
// an edge is identified by its position in BecInstance::edges, never by
// its endpoint pair.
struct Edge {
  int input = 0;
  int output = 0;
  int bound = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A bounded-edge-coloring instance: bipartite multigraph plus a positive
// integer bound per edge. Immutable by convention once built; all
// operations below are const and return fresh values.
struct BecInstance {
  int input_count = 0;
  int output_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Number of edges (parallel edges included) incident to the vertex.
  // Throws std::out_of_range for a bad index.
  int degree(Side side, int vertex) const;

  // Max vertex degree over both sides; 0 for an edgeless instance.
  int max_degree() const;

  // Largest edge bound (b_max); 0 for an edgeless instance.
  int max_bound() const;

  // Degrees of all vertices on one side.
  std::vector<int> degrees(Side side) const;

  // Throws std::invalid_argument if an endpoint is out of range or a
  // bound is < 1.
  void check() const;

  friend bool operator==(const BecInstance&, const BecInstance&) = default;
};

// Result of a subgraph restriction: the restricted instance plus the map
// from new edge ids to the edge ids of the source instance.
struct Subgraph {
  BecInstance graph;
  std::vector<int> original_ids;
};

// Edges with bound >= k (the graph written G^k).
Subgraph subgraph_geq(const BecInstance& g, int k);

// Edges with bound <= k (the graph written G_k).
Subgraph subgraph_leq(const BecInstance& g, int k);

// Edge -> color assignment, possibly partial. Color 0 means "uncolored";
// assigned colors are >= 1.
struct Coloring {
  static constexpr int kUncolored = 0;

  std::vector<int> colors;

  Coloring() = default;
  explicit Coloring(int edge_count) : colors(edge_count, kUncolored) {}

  int edge_count() const { return static_cast<int>(colors.size()); }
  bool is_complete() const;
  int max_color() const;  // 0 when nothing is colored

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class ValidateMode {
  Strict,   // uncolored edges are violations
  Partial,  // only assigned edges are checked
};

enum class ViolationKind { Incomplete, BoundViolation, Conflict };

struct Violation {
  ViolationKind kind;
  int edge = -1;        // offending edge id
  int other_edge = -1;  // second edge of a conflict, otherwise -1
};

struct Verdict {
  bool valid = false;
  int max_color = 0;  // largest assigned color, 0 if none
  std::vector<Violation> violations;
};

// Checks completeness (strict mode), c(e) >= b(e), and properness (no two
// edges sharing an endpoint carry the same color). Violations are data,
// not errors. Throws std::invalid_argument if the coloring is not sized
// to the instance.
Verdict validate_coloring(const BecInstance& g, const Coloring& c,
                          ValidateMode mode = ValidateMode::Strict);

// True iff for every input all incident edge bounds are pairwise
// distinct. Vacuously true for an edgeless instance.
bool check_unique_input_bounds(const BecInstance& g);

std::string to_string(ViolationKind kind);

}  // namespace bec

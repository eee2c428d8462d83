#pragma once

#include <vector>

#include "bec/instance.hpp"

namespace bec {

// Edge ids (ascending) of a host instance; no two members share an
// input or an output.
struct Matching {
  std::vector<int> edge_ids;

  int size() const { return static_cast<int>(edge_ids.size()); }
};

// Per-vertex positive integer priorities, 1 = highest. Classes may be
// sparse.
struct PriorityAssignment {
  std::vector<int> input_priority;
  std::vector<int> output_priority;
};

// Maximum-cardinality matching (Hopcroft-Karp, lowest-edge-id-first
// search order, so results are deterministic).
Matching max_matching(const BecInstance& g);

// Among maximum-size matchings, one maximizing the number of matched
// vertices whose degree equals the max degree of g.
Matching max_degree_matching(const BecInstance& g);

// Among maximum-size matchings, one whose matched-vertex class counts
// are lexicographically maximal: first the count of matched priority-1
// vertices, then priority-2, and so on.
Matching priority_matching(const BecInstance& g,
                           const PriorityAssignment& prio);

// Hopcroft-Karp matcher that accepts edges incrementally; used to walk
// the matching sizes of G_1, G_2, ... without recomputing from scratch.
class IncrementalMatcher {
 public:
  IncrementalMatcher(int inputs, int outputs);

  void add_edge(int edge_id, int input, int output);

  // Augments to maximality over everything added so far; returns the
  // matching size.
  int augment();

  int size() const { return size_; }

  // Per input / output: matched edge id or -1.
  const std::vector<int>& input_match() const { return in_match_; }
  const std::vector<int>& output_match() const { return out_match_; }

  std::vector<int> matched_edge_ids() const;

 private:
  bool try_kuhn(int input);

  struct Arc {
    int output;
    int edge;
  };
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> in_match_, out_match_;  // edge ids
  std::vector<int> in_mate_, out_mate_;    // vertex ids
  std::vector<int> dist_;
  std::vector<int> queue_;
  std::vector<size_t> it_;
  int size_ = 0;

  bool bfs();
  bool dfs(int input);
};

}  // namespace bec

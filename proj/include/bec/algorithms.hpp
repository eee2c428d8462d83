#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bec/instance.hpp"

namespace bec {

struct AlgorithmStats {
  std::vector<int> phase_colored;  // edges colored per phase/round
  long long augmentations = 0;     // alternating-path reversals
  double elapsed_ms = 0.0;
};

struct AlgorithmResult {
  Coloring coloring;
  int max_color = 0;
  AlgorithmStats stats;
};

// Proper edge coloring of the underlying bipartite multigraph using
// exactly the colors first_color .. first_color + maxdeg - 1. Edge
// bounds are deliberately ignored; callers guarantee first_color
// dominates every relevant bound.
AlgorithmResult konig_color(const BecInstance& g, int first_color);

// konig_color from b_max: always bound-valid, max color <= b_max +
// maxdeg - 1 < 2 C*.
AlgorithmResult trivial_shift(const BecInstance& g);

// Repeatedly pick an uncolored edge at a vertex of maximum degree in
// the uncolored subgraph and give it the smallest color >= its bound
// free at both endpoints.
AlgorithmResult greedy(const BecInstance& g);

// The four-case procedure: (1) smallest eligible color free at both
// ends, (2)/(3) two-color alternating-path reversal where every path
// edge has bound <= min{i,j}, (4) allocate a new eligible color.
// Colors 1..b_max start eligible; max color <= b_max + maxdeg - 1.
AlgorithmResult augmenting_path(const BecInstance& g);

enum class SeriesVariant { MaxSize, MaxDegree, Priority };

// Round k colors a matching of the uncolored part of G_k with color k.
// MaxDegree/Priority rank vertices by degree in the round's host graph
// and use no color larger than b_max + maxdeg - 1.
AlgorithmResult matching_series(const BecInstance& g, SeriesVariant variant);

enum class SplitSub { Konig, AugPath, MaxDegree, Priority };

// Splits at k = floor(b_max/2) via the least feasible C, colors H_k
// with colors k..2k-1 and J_k with colors >= b_max (default konig, or
// a sub-algorithm restricted to that range). Max color <=
// floor(b_max/2) + C*.
AlgorithmResult splitting(const BecInstance& g, SplitSub sub = SplitSub::Konig);

// Closed-form coloring of build_bn(n): tails get their bounds; the
// triangle cells are covered by diagonal bands (fresh colors n+1..n+x
// on the x inner diagonals, segment-per-diagonal colors <= n on the
// rest), where x = ceil((n-1)/3). Max color is exactly n + x for
// n >= 2, and 1 for n = 1.
AlgorithmResult color_bn(int n);

struct ExactBudget {
  long long max_nodes = -1;     // -1 = unlimited
  long long time_limit_ms = -1; // -1 = unlimited
};

enum class ExactStatus { Proved, Timeout };

struct ExactResult {
  int optimum = 0;  // proved optimum, or best found on timeout
  Coloring coloring;
  ExactStatus status = ExactStatus::Proved;
  long long nodes = 0;
};

// Branch and bound over edges (bound descending), seeded with the
// priority matching series as incumbent and pruned with the degree and
// matching bounds of the residual suffix.
ExactResult exact(const BecInstance& g, const ExactBudget& budget = {});

enum class DecideStatus { Found, Infeasible, Timeout };

struct DecideResult {
  DecideStatus status = DecideStatus::Infeasible;
  Coloring coloring;  // witness when Found
  long long nodes = 0;
};

// Decision form: is there a valid coloring with max color <= limit?
DecideResult color_within(const BecInstance& g, int limit,
                          const ExactBudget& budget = {});

// Named algorithm registry for the CLI and the benchmark harness.
struct AlgorithmEntry {
  std::string name;
  std::function<AlgorithmResult(const BecInstance&)> run;
};

const std::vector<AlgorithmEntry>& algorithm_registry();
AlgorithmResult run_algorithm(const std::string& name, const BecInstance& g);

}  // namespace bec

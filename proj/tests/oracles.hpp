// Test-only oracles: small brute-force enumerators kept independent of
// the library's algorithm implementations.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>
#include <vector>

#include "bec/generators.hpp"
#include "bec/instance.hpp"

namespace bec::test {

inline BecInstance make(int inputs, int outputs,
                        std::vector<std::tuple<int, int, int>> edges) {
  BecInstance g;
  g.input_count = inputs;
  g.output_count = outputs;
  for (auto [i, o, b] : edges) g.edges.push_back({i, o, b});
  return g;
}

// True iff no two assigned same-colored edges share an endpoint.
inline bool proper(const BecInstance& g, const Coloring& c) {
  for (int a = 0; a < g.edge_count(); ++a)
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (c.colors[a] == Coloring::kUncolored ||
          c.colors[a] != c.colors[b])
        continue;
      if (g.edges[a].input == g.edges[b].input ||
          g.edges[a].output == g.edges[b].output)
        return false;
    }
  return true;
}

// Enumerates every matching (as an edge-id subset) of a small instance.
inline void for_each_matching(const BecInstance& g,
                              const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> picked;
  std::function<void(int)> rec = [&](int id) {
    if (id == g.edge_count()) {
      fn(picked);
      return;
    }
    rec(id + 1);
    for (int other : picked) {
      if (g.edges[other].input == g.edges[id].input ||
          g.edges[other].output == g.edges[id].output)
        return;
    }
    picked.push_back(id);
    rec(id + 1);
    picked.pop_back();
  };
  rec(0);
}

inline int oracle_max_matching_size(const BecInstance& g) {
  int best = 0;
  for_each_matching(g, [&](const std::vector<int>& m) {
    best = std::max(best, static_cast<int>(m.size()));
  });
  return best;
}

// Matched-vertex counts per priority class 1..max_class for a matching.
inline std::vector<int> class_counts(const BecInstance& g,
                                     const std::vector<int>& matching,
                                     const std::vector<int>& in_prio,
                                     const std::vector<int>& out_prio) {
  int max_class = 1;
  for (int p : in_prio) max_class = std::max(max_class, p);
  for (int p : out_prio) max_class = std::max(max_class, p);
  std::vector<int> counts(max_class + 1, 0);
  for (int id : matching) {
    ++counts[in_prio[g.edges[id].input]];
    ++counts[out_prio[g.edges[id].output]];
  }
  counts.erase(counts.begin());  // class numbers are 1-based
  return counts;
}

// Lexicographically best class-count vector over all maximum matchings.
inline std::vector<int> oracle_best_class_counts(
    const BecInstance& g, const std::vector<int>& in_prio,
    const std::vector<int>& out_prio) {
  int max_size = oracle_max_matching_size(g);
  std::vector<int> best;
  for_each_matching(g, [&](const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != max_size) return;
    std::vector<int> counts = class_counts(g, m, in_prio, out_prio);
    if (best.empty() || counts > best) best = counts;
  });
  return best;
}

// Prune-free exhaustive optimum: the smallest C that admits a valid
// coloring, found by plain depth-first search over colors 1..C.
inline bool feasible_within(const BecInstance& g, int limit) {
  std::vector<int> colors(g.edge_count(), 0);
  std::function<bool(int)> rec = [&](int id) {
    if (id == g.edge_count()) return true;
    for (int c = g.edges[id].bound; c <= limit; ++c) {
      bool clash = false;
      for (int other = 0; other < id && !clash; ++other) {
        if (colors[other] != c) continue;
        if (g.edges[other].input == g.edges[id].input ||
            g.edges[other].output == g.edges[id].output)
          clash = true;
      }
      if (clash) continue;
      colors[id] = c;
      if (rec(id + 1)) return true;
      colors[id] = 0;
    }
    return false;
  };
  return rec(0);
}

inline int brute_force_optimum(const BecInstance& g) {
  if (g.edges.empty()) return 0;
  for (int c = g.max_bound();; ++c)
    if (feasible_within(g, c)) return c;
}

// Brute-force completion check for a partial coloring instance.
inline bool completion_exists(const PartialColoredGraph& pg) {
  const BecInstance& g = pg.graph;
  std::vector<int> uncolored;
  for (int id = 0; id < g.edge_count(); ++id)
    if (g.edges[id].bound == 0) uncolored.push_back(id);
  std::vector<int> colors(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) colors[id] = g.edges[id].bound;

  auto clashes = [&](int id, int c) {
    for (int other = 0; other < g.edge_count(); ++other) {
      if (other == id || colors[other] != c) continue;
      if (g.edges[other].input == g.edges[id].input ||
          g.edges[other].output == g.edges[id].output)
        return true;
    }
    return false;
  };
  std::function<bool(size_t)> rec = [&](size_t pos) {
    if (pos == uncolored.size()) return true;
    int id = uncolored[pos];
    for (int c = 1; c <= pg.k; ++c) {
      if (clashes(id, c)) continue;
      colors[id] = c;
      if (rec(pos + 1)) return true;
      colors[id] = 0;
    }
    return false;
  };
  return rec(0);
}

// Small random multigraph, not necessarily regular.
inline BecInstance random_small(std::mt19937_64& rng, int max_side,
                                int max_edges, int max_bound) {
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  BecInstance g;
  g.input_count = draw(1, max_side);
  g.output_count = draw(1, max_side);
  int m = draw(0, max_edges);
  for (int i = 0; i < m; ++i)
    g.edges.push_back({draw(0, g.input_count - 1), draw(0, g.output_count - 1),
                       draw(1, max_bound)});
  return g;
}

// Random partial-coloring instance with a proper precoloring and at
// most k uncolored edges per input.
inline PartialColoredGraph random_partial(std::mt19937_64& rng, int max_side,
                                          int max_edges, int max_k) {
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  PartialColoredGraph pg;
  pg.k = draw(1, max_k);
  pg.graph.input_count = draw(1, max_side);
  pg.graph.output_count = draw(1, max_side);
  int m = draw(1, max_edges);
  std::vector<int> uncolored_at(pg.graph.input_count, 0);
  for (int t = 0; t < m; ++t) {
    int i = draw(0, pg.graph.input_count - 1);
    int o = draw(0, pg.graph.output_count - 1);
    int c = draw(0, pg.k);
    if (c != 0) {
      bool clash = false;
      for (const Edge& e : pg.graph.edges)
        if (e.bound == c && (e.input == i || e.output == o)) clash = true;
      if (clash) c = 0;
    }
    if (c == 0) {
      if (uncolored_at[i] == pg.k) continue;  // keep the reduction buildable
      ++uncolored_at[i];
    }
    pg.graph.edges.push_back({i, o, c});
  }
  return pg;
}

}  // namespace bec::test

#include "bec/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "bec/bounds.hpp"
#include "bec/flow.hpp"
#include "bec/generators.hpp"
#include "bec/matching.hpp"

namespace bec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int finish(AlgorithmResult& r, Clock::time_point start) {
  r.max_color = r.coloring.max_color();
  r.stats.elapsed_ms = ms_since(start);
  return r.max_color;
}

// ---------------------------------------------------------------------
// konig_color: the alternating-path Delta-coloring for bipartite
// multigraphs, run on color slots 0..delta-1.

struct SlotTables {
  std::vector<std::vector<int>> in, out;  // slot -> edge id or -1

  SlotTables(const BecInstance& g, int delta)
      : in(g.input_count, std::vector<int>(delta, -1)),
        out(g.output_count, std::vector<int>(delta, -1)) {}

  std::vector<int>& at(Side s, int v) {
    return s == Side::Input ? in[v] : out[v];
  }
};

int first_free(const std::vector<int>& slots) {
  for (size_t i = 0; i < slots.size(); ++i)
    if (slots[i] == -1) return static_cast<int>(i);
  throw std::logic_error("konig: no free slot");
}

}  // namespace

AlgorithmResult konig_color(const BecInstance& g, int first_color) {
  if (first_color < 1)
    throw std::invalid_argument("konig_color: first_color must be >= 1");
  auto start = Clock::now();
  AlgorithmResult r;
  r.coloring = Coloring(g.edge_count());

  int delta = g.max_degree();
  SlotTables tab(g, delta);
  std::vector<int> slot_of(g.edge_count(), -1);

  for (int id = 0; id < g.edge_count(); ++id) {
    int u = g.edges[id].input;
    int v = g.edges[id].output;
    int a = first_free(tab.in[u]);
    int b = first_free(tab.out[v]);

    if (tab.out[v][a] != -1) {
      // Flip the maximal ab-alternating path from v; it cannot reach u.
      std::vector<int> path;
      int z = v;
      Side zs = Side::Output;
      int want = a;
      while (true) {
        int f = tab.at(zs, z)[want];
        if (f == -1) break;
        path.push_back(f);
        z = zs == Side::Output ? g.edges[f].input : g.edges[f].output;
        zs = zs == Side::Output ? Side::Input : Side::Output;
        want = want == a ? b : a;
      }
      for (int f : path) {
        tab.in[g.edges[f].input][slot_of[f]] = -1;
        tab.out[g.edges[f].output][slot_of[f]] = -1;
      }
      for (int f : path) {
        slot_of[f] = slot_of[f] == a ? b : a;
        tab.in[g.edges[f].input][slot_of[f]] = f;
        tab.out[g.edges[f].output][slot_of[f]] = f;
        r.coloring.colors[f] = first_color + slot_of[f];
      }
      ++r.stats.augmentations;
    }

    slot_of[id] = a;
    tab.in[u][a] = id;
    tab.out[v][a] = id;
    r.coloring.colors[id] = first_color + a;
  }

  finish(r, start);
  return r;
}

AlgorithmResult trivial_shift(const BecInstance& g) {
  int bmax = g.max_bound();
  return konig_color(g, std::max(1, bmax));
}

// ---------------------------------------------------------------------
// Shared pivot rule for greedy and the augmenting-path method: vertex of
// maximum degree in the uncolored subgraph (ties: inputs before outputs,
// lowest index), then its uncolored edge of smallest bound, then
// smallest id.

namespace {

struct PivotState {
  std::vector<std::vector<int>> in_adj, out_adj;
  std::vector<int> in_deg, out_deg;  // uncolored degrees
  std::vector<char> colored;

  explicit PivotState(const BecInstance& g)
      : in_adj(g.input_count), out_adj(g.output_count),
        in_deg(g.input_count, 0), out_deg(g.output_count, 0),
        colored(g.edge_count(), 0) {
    for (int id = 0; id < g.edge_count(); ++id) {
      in_adj[g.edges[id].input].push_back(id);
      out_adj[g.edges[id].output].push_back(id);
      ++in_deg[g.edges[id].input];
      ++out_deg[g.edges[id].output];
    }
  }

  int pick(const BecInstance& g) const {
    int best_deg = 0;
    Side side = Side::Input;
    int vtx = -1;
    for (int u = 0; u < static_cast<int>(in_deg.size()); ++u)
      if (in_deg[u] > best_deg) best_deg = in_deg[u], side = Side::Input, vtx = u;
    for (int v = 0; v < static_cast<int>(out_deg.size()); ++v)
      if (out_deg[v] > best_deg) best_deg = out_deg[v], side = Side::Output, vtx = v;
    const auto& adj = side == Side::Input ? in_adj[vtx] : out_adj[vtx];
    int chosen = -1;
    for (int id : adj) {
      if (colored[id]) continue;
      if (chosen == -1 || g.edges[id].bound < g.edges[chosen].bound)
        chosen = id;
    }
    return chosen;
  }

  void mark(const BecInstance& g, int id) {
    colored[id] = 1;
    --in_deg[g.edges[id].input];
    --out_deg[g.edges[id].output];
  }
};

// Per-vertex color -> edge id tables, growable because the augmenting
// path method can allocate colors past the initial estimate.
struct ColorTables {
  std::vector<std::vector<int>> in, out;
  int cap;

  ColorTables(const BecInstance& g, int cap0) : cap(std::max(cap0, 1)) {
    in.assign(g.input_count, std::vector<int>(cap + 1, -1));
    out.assign(g.output_count, std::vector<int>(cap + 1, -1));
  }

  void ensure(int color) {
    if (color <= cap) return;
    cap = color * 2;
    for (auto& t : in) t.resize(cap + 1, -1);
    for (auto& t : out) t.resize(cap + 1, -1);
  }

  std::vector<int>& at(Side s, int v) {
    return s == Side::Input ? in[v] : out[v];
  }

  void set(const BecInstance& g, int id, int color) {
    in[g.edges[id].input][color] = id;
    out[g.edges[id].output][color] = id;
  }

  void clear(const BecInstance& g, int id, int color) {
    in[g.edges[id].input][color] = -1;
    out[g.edges[id].output][color] = -1;
  }
};

}  // namespace

AlgorithmResult greedy(const BecInstance& g) {
  auto start = Clock::now();
  AlgorithmResult r;
  r.coloring = Coloring(g.edge_count());

  PivotState pivot(g);
  ColorTables tab(g, g.max_bound() + 2 * g.max_degree() + 2);

  for (int step = 0; step < g.edge_count(); ++step) {
    int id = pivot.pick(g);
    int u = g.edges[id].input;
    int v = g.edges[id].output;
    int c = g.edges[id].bound;
    while (tab.in[u][c] != -1 || tab.out[v][c] != -1) {
      ++c;
      tab.ensure(c);
    }
    r.coloring.colors[id] = c;
    tab.set(g, id, c);
    pivot.mark(g, id);
  }

  finish(r, start);
  return r;
}

namespace {

// Maximal two-color alternating walk from `from`, first following the
// edge colored `first` and then alternating with `second`. Returns the
// edge ids, or nullopt if some edge's bound exceeds `bound_cap` (such a
// path is not reversible).
std::optional<std::vector<int>> alternating_walk(const BecInstance& g,
                                                 ColorTables& tab,
                                                 int from, Side from_side,
                                                 int first, int second,
                                                 int bound_cap) {
  std::vector<int> path;
  int z = from;
  Side zs = from_side;
  int want = first;
  while (true) {
    int f = tab.at(zs, z)[want];
    if (f == -1) break;
    if (g.edges[f].bound > bound_cap) return std::nullopt;
    path.push_back(f);
    z = zs == Side::Output ? g.edges[f].input : g.edges[f].output;
    zs = zs == Side::Output ? Side::Input : Side::Output;
    want = want == first ? second : first;
  }
  return path;
}

void flip_walk(const BecInstance& g, ColorTables& tab, Coloring& col,
               const std::vector<int>& path, int i, int j) {
  for (int f : path) tab.clear(g, f, col.colors[f]);
  for (int f : path) {
    col.colors[f] = col.colors[f] == i ? j : i;
    tab.set(g, f, col.colors[f]);
  }
}

}  // namespace

AlgorithmResult augmenting_path(const BecInstance& g) {
  auto start = Clock::now();
  AlgorithmResult r;
  r.coloring = Coloring(g.edge_count());
  r.stats.phase_colored.assign(4, 0);  // per case

  PivotState pivot(g);
  int bmax = g.max_bound();
  int eligible = std::max(1, bmax);
  ColorTables tab(g, bmax + g.max_degree() + 2);

  auto free_in = [&](int u, int c) { return tab.in[u][c] == -1; };
  auto free_out = [&](int v, int c) { return tab.out[v][c] == -1; };

  for (int step = 0; step < g.edge_count(); ++step) {
    int id = pivot.pick(g);
    int u = g.edges[id].input;
    int v = g.edges[id].output;
    int bound = g.edges[id].bound;
    int assigned = 0;

    // Case 1: smallest eligible color >= bound free at both ends.
    for (int c = bound; c <= eligible && !assigned; ++c)
      if (free_in(u, c) && free_out(v, c)) {
        assigned = c;
        r.stats.phase_colored[0]++;
      }

    // Cases 2 and 3: color pairs ordered by max{i,j}, then min, then i.
    // Reversal is sound only if every path edge has bound <= min{i,j}.
    if (!assigned) {
      for (int hi = 2; hi <= eligible && !assigned; ++hi) {
        for (int lo = 1; lo < hi && !assigned; ++lo) {
          int pair_i[2] = {lo, hi};
          for (int t = 0; t < 2 && !assigned; ++t) {
            int i = pair_i[t], j = t == 0 ? hi : lo;
            if (i < bound || !free_in(u, i) || !free_out(v, j)) continue;
            auto path = alternating_walk(g, tab, v, Side::Output, i, j,
                                         std::min(i, j));
            if (!path) continue;
            flip_walk(g, tab, r.coloring, *path, i, j);
            assigned = i;
            ++r.stats.augmentations;
            r.stats.phase_colored[1]++;
          }
        }
      }
    }
    if (!assigned) {
      for (int hi = 2; hi <= eligible && !assigned; ++hi) {
        for (int lo = 1; lo < hi && !assigned; ++lo) {
          int pair_j[2] = {lo, hi};
          for (int t = 0; t < 2 && !assigned; ++t) {
            int j = pair_j[t], i = t == 0 ? hi : lo;
            if (j < bound || !free_in(u, i) || !free_out(v, j)) continue;
            auto path = alternating_walk(g, tab, u, Side::Input, j, i,
                                         std::min(i, j));
            if (!path) continue;
            flip_walk(g, tab, r.coloring, *path, j, i);
            assigned = j;
            ++r.stats.augmentations;
            r.stats.phase_colored[2]++;
          }
        }
      }
    }

    // Case 4: allocate the next color.
    if (!assigned) {
      assigned = ++eligible;
      tab.ensure(assigned);
      r.stats.phase_colored[3]++;
    }

    r.coloring.colors[id] = assigned;
    tab.set(g, id, assigned);
    pivot.mark(g, id);
  }

  finish(r, start);
  return r;
}

namespace {

// Priorities for a series round come from the degrees of the whole
// uncolored subgraph, not just the round's host graph: a vertex with
// many uncolored edges left (whatever their bounds) is the one to
// relieve first.
PriorityAssignment rank_priorities(const std::vector<int>& in_deg,
                                   const std::vector<int>& out_deg) {
  std::vector<int> all = in_deg;
  all.insert(all.end(), out_deg.begin(), out_deg.end());
  std::sort(all.begin(), all.end(), std::greater<>());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto rank = [&](int d) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), d,
                                             std::greater<>()) -
                            all.begin()) +
           1;
  };
  PriorityAssignment prio;
  for (int d : in_deg) prio.input_priority.push_back(rank(d));
  for (int d : out_deg) prio.output_priority.push_back(rank(d));
  return prio;
}

PriorityAssignment top_degree_priorities(const std::vector<int>& in_deg,
                                         const std::vector<int>& out_deg) {
  int dmax = 0;
  for (int d : in_deg) dmax = std::max(dmax, d);
  for (int d : out_deg) dmax = std::max(dmax, d);
  PriorityAssignment prio;
  for (int d : in_deg) prio.input_priority.push_back(d == dmax ? 1 : 2);
  for (int d : out_deg) prio.output_priority.push_back(d == dmax ? 1 : 2);
  return prio;
}

}  // namespace

AlgorithmResult matching_series(const BecInstance& g, SeriesVariant variant) {
  auto start = Clock::now();
  AlgorithmResult r;
  r.coloring = Coloring(g.edge_count());

  int uncolored = g.edge_count();
  int k = 0;
  std::vector<int> in_deg(g.input_count, 0), out_deg(g.output_count, 0);
  for (const Edge& e : g.edges) {
    ++in_deg[e.input];
    ++out_deg[e.output];
  }
  while (uncolored > 0) {
    ++k;
    BecInstance host;
    host.input_count = g.input_count;
    host.output_count = g.output_count;
    std::vector<int> ids;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (r.coloring.colors[id] != Coloring::kUncolored) continue;
      if (g.edges[id].bound > k) continue;
      host.edges.push_back(g.edges[id]);
      ids.push_back(id);
    }
    if (host.edges.empty()) {
      r.stats.phase_colored.push_back(0);
      continue;
    }
    Matching match;
    switch (variant) {
      case SeriesVariant::MaxSize:
        match = max_matching(host);
        break;
      case SeriesVariant::MaxDegree:
        match = priority_matching(host, top_degree_priorities(in_deg, out_deg));
        break;
      case SeriesVariant::Priority:
        match = priority_matching(host, rank_priorities(in_deg, out_deg));
        break;
    }
    for (int h : match.edge_ids) {
      r.coloring.colors[ids[h]] = k;
      --uncolored;
      --in_deg[g.edges[ids[h]].input];
      --out_deg[g.edges[ids[h]].output];
    }
    r.stats.phase_colored.push_back(match.size());
  }

  finish(r, start);
  return r;
}

namespace {

BecInstance induced(const BecInstance& g, const std::vector<int>& ids) {
  BecInstance sub;
  sub.input_count = g.input_count;
  sub.output_count = g.output_count;
  for (int id : ids) sub.edges.push_back(g.edges[id]);
  return sub;
}

}  // namespace

AlgorithmResult splitting(const BecInstance& g, SplitSub sub) {
  auto start = Clock::now();
  if (g.edges.empty()) {
    AlgorithmResult r;
    finish(r, start);
    return r;
  }

  int bmax = g.max_bound();
  if (bmax == 1) {
    AlgorithmResult r = trivial_shift(g);
    r.stats.elapsed_ms = ms_since(start);
    return r;
  }

  int k = bmax / 2;
  int lo = std::max({2 * k, degree_bound(g), matching_bound(g)});
  std::optional<SplitResult> parts;
  int C = lo;
  for (;; ++C) {
    parts = split(g, k, C);
    if (parts) break;
  }

  AlgorithmResult r;
  r.coloring = Coloring(g.edge_count());

  BecInstance h_inst = induced(g, parts->h_edge_ids);
  AlgorithmResult h_res = konig_color(h_inst, k);
  for (size_t i = 0; i < parts->h_edge_ids.size(); ++i)
    r.coloring.colors[parts->h_edge_ids[i]] = h_res.coloring.colors[i];

  BecInstance j_inst = induced(g, parts->j_edge_ids);
  AlgorithmResult j_res;
  if (sub == SplitSub::Konig) {
    j_res = konig_color(j_inst, bmax);
  } else {
    // Lifting every bound to b_max keeps the sub-algorithm's colors in
    // b_max .. b_max + maxdeg(J) - 1, clear of H's range k..2k-1.
    for (Edge& e : j_inst.edges) e.bound = bmax;
    switch (sub) {
      case SplitSub::AugPath: j_res = augmenting_path(j_inst); break;
      case SplitSub::MaxDegree:
        j_res = matching_series(j_inst, SeriesVariant::MaxDegree);
        break;
      case SplitSub::Priority:
        j_res = matching_series(j_inst, SeriesVariant::Priority);
        break;
      default: break;
    }
  }
  for (size_t i = 0; i < parts->j_edge_ids.size(); ++i)
    r.coloring.colors[parts->j_edge_ids[i]] = j_res.coloring.colors[i];

  r.stats.phase_colored = {static_cast<int>(parts->h_edge_ids.size()),
                           static_cast<int>(parts->j_edge_ids.size())};
  finish(r, start);
  return r;
}

// ---------------------------------------------------------------------
// Closed-form coloring of B_n.
//
// Triangle cell (i, j), 1 <= j <= i <= n, holds the edge (u_i, v_j) of
// bound j; a cell's color must be >= j and must avoid i+1..n (the tail
// colors of u_i). Diagonals d = i - j:
//   d < x          -> fresh color n + 1 + d
//   d >= x, short  -> single segment, one color in [n-d, d+1]
//   d >= x, long   -> upper part j <= d+1 forced to color d+1, lower
//                     part one color in [n-d, 2d+2]
// Segment colors are made distinct by a greedy interval assignment.

namespace {

struct BnScheme {
  int x = 0;
  std::vector<int> single, upper, lower;  // per diagonal d, -1 if unused

  explicit BnScheme(int n) {
    x = (n + 1) / 3;  // = ceil((n-1)/3)
    single.assign(n, -1);
    upper.assign(n, -1);
    lower.assign(n, -1);

    struct Seg {
      int lo, hi, d;
      int* slot;
    };
    std::vector<Seg> segs;
    for (int d = x; d <= n - 1; ++d) {
      int len = n - d;
      if (len <= d + 1) {
        segs.push_back({len, std::min(n, d + 1), d, &single[d]});
      } else {
        segs.push_back({d + 1, d + 1, d, &upper[d]});
        segs.push_back({len, std::min(n, 2 * d + 2), d, &lower[d]});
      }
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
      return std::tie(a.hi, a.lo, a.d) < std::tie(b.hi, b.lo, b.d);
    });
    std::vector<char> used(n + 1, 0);
    for (Seg& s : segs) {
      int c = s.lo;
      while (c <= s.hi && used[c]) ++c;
      if (c > s.hi)
        throw std::logic_error("color_bn: segment interval exhausted");
      used[c] = 1;
      *s.slot = c;
    }
  }

  int cell_color(int n, int i, int j) const {
    int d = i - j;
    if (d < x) return n + 1 + d;
    if (single[d] != -1) return single[d];
    return j <= d + 1 ? upper[d] : lower[d];
  }
};

}  // namespace

AlgorithmResult color_bn(int n) {
  if (n < 1) throw std::invalid_argument("color_bn: n must be >= 1");
  auto start = Clock::now();

  BnScheme scheme(n);
  AlgorithmResult r;
  r.coloring = Coloring(n * n);
  int id = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) r.coloring.colors[id++] = scheme.cell_color(n, i, j);
    for (int j = i + 1; j <= n; ++j) r.coloring.colors[id++] = j;
  }

  finish(r, start);
  return r;
}

// ---------------------------------------------------------------------
// Exact search, shared by the optimizing and decision entry points.

namespace {

struct Searcher {
  const BecInstance& g;
  ExactBudget budget;
  Clock::time_point start;

  std::vector<int> order;      // edge ids: bound desc, degree sum desc, id
  std::vector<int> lb_suffix;  // lower bound for coloring order[pos..]
  ColorTables tab;
  Coloring cur;
  int bmax;

  int ub;               // exclusive: colors used must stay < ub
  bool stop_at_first = false;
  bool found = false;
  Coloring best;
  int best_val = 0;
  long long nodes = 0;
  bool timed_out = false;

  Searcher(const BecInstance& g_, const ExactBudget& b, int ub_)
      : g(g_), budget(b), start(Clock::now()),
        tab(g_, std::max(1, ub_ - 1)), cur(g_.edge_count()),
        bmax(g_.max_bound()), ub(ub_) {
    std::vector<int> in_deg = g.degrees(Side::Input);
    std::vector<int> out_deg = g.degrees(Side::Output);
    order.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b2) {
      int da = in_deg[g.edges[a].input] + out_deg[g.edges[a].output];
      int db = in_deg[g.edges[b2].input] + out_deg[g.edges[b2].output];
      if (g.edges[a].bound != g.edges[b2].bound)
        return g.edges[a].bound > g.edges[b2].bound;
      if (da != db) return da > db;
      return a < b2;
    });

    // Suffix instances are fixed, so their bounds can be precomputed.
    lb_suffix.assign(g.edge_count() + 1, 0);
    for (int pos = g.edge_count() - 1; pos >= 0; --pos) {
      BecInstance rest;
      rest.input_count = g.input_count;
      rest.output_count = g.output_count;
      for (int p = pos; p < g.edge_count(); ++p)
        rest.edges.push_back(g.edges[order[p]]);
      lb_suffix[pos] =
          std::max(degree_bound(rest), matching_bound(rest));
    }
  }

  bool out_of_budget() {
    if (budget.max_nodes >= 0 && nodes > budget.max_nodes) return true;
    if (budget.time_limit_ms >= 0 && (nodes & 1023) == 0 &&
        ms_since(start) > static_cast<double>(budget.time_limit_ms))
      return true;
    return false;
  }

  // Returns false when the search was aborted by the budget.
  bool dfs(int pos, int max_used) {
    ++nodes;
    if (out_of_budget()) {
      timed_out = true;
      return false;
    }
    if (pos == g.edge_count()) {
      found = true;
      best = cur;
      best_val = max_used;
      ub = max_used;  // only strictly better solutions from here on
      return !stop_at_first;
    }
    if (lb_suffix[pos] >= ub) return true;

    int id = order[pos];
    int u = g.edges[id].input;
    int v = g.edges[id].output;
    // Colors above max(bmax, max_used) are interchangeable; trying one
    // fresh value is enough.
    int cap = std::min(ub - 1, std::max(bmax, max_used) + 1);
    for (int c = g.edges[id].bound; c <= cap; ++c) {
      if (tab.in[u][c] != -1 || tab.out[v][c] != -1) continue;
      cur.colors[id] = c;
      tab.set(g, id, c);
      bool keep_going = dfs(pos + 1, std::max(max_used, c));
      tab.clear(g, id, c);
      cur.colors[id] = Coloring::kUncolored;
      if (!keep_going) return false;
      cap = std::min(ub - 1, std::max(bmax, max_used) + 1);
    }
    return true;
  }
};

}  // namespace

ExactResult exact(const BecInstance& g, const ExactBudget& budget) {
  ExactResult res;
  if (g.edges.empty()) {
    res.optimum = 0;
    res.status = ExactStatus::Proved;
    return res;
  }

  AlgorithmResult seed = matching_series(g, SeriesVariant::Priority);
  res.optimum = seed.max_color;
  res.coloring = seed.coloring;

  int lb = std::max(degree_bound(g), matching_bound(g));
  if (lb >= seed.max_color) {
    res.status = ExactStatus::Proved;
    return res;
  }

  Searcher s(g, budget, seed.max_color);
  s.dfs(0, 0);
  res.nodes = s.nodes;
  if (s.found) {
    res.optimum = s.best_val;
    res.coloring = s.best;
  }
  res.status = s.timed_out ? ExactStatus::Timeout : ExactStatus::Proved;
  return res;
}

DecideResult color_within(const BecInstance& g, int limit,
                          const ExactBudget& budget) {
  DecideResult res;
  if (g.edges.empty()) {
    res.status = DecideStatus::Found;
    return res;
  }
  if (limit < 1) {
    res.status = DecideStatus::Infeasible;
    return res;
  }

  Searcher s(g, budget, limit + 1);
  s.stop_at_first = true;
  s.dfs(0, 0);
  res.nodes = s.nodes;
  if (s.found) {
    res.status = DecideStatus::Found;
    res.coloring = s.best;
  } else {
    res.status = s.timed_out ? DecideStatus::Timeout : DecideStatus::Infeasible;
  }
  return res;
}

// ---------------------------------------------------------------------

const std::vector<AlgorithmEntry>& algorithm_registry() {
  static const std::vector<AlgorithmEntry> entries = {
      {"trivial", [](const BecInstance& g) { return trivial_shift(g); }},
      {"greedy", [](const BecInstance& g) { return greedy(g); }},
      {"augpath", [](const BecInstance& g) { return augmenting_path(g); }},
      {"match-size",
       [](const BecInstance& g) {
         return matching_series(g, SeriesVariant::MaxSize);
       }},
      {"match-degree",
       [](const BecInstance& g) {
         return matching_series(g, SeriesVariant::MaxDegree);
       }},
      {"match-priority",
       [](const BecInstance& g) {
         return matching_series(g, SeriesVariant::Priority);
       }},
      {"split", [](const BecInstance& g) { return splitting(g); }},
      {"split-augpath",
       [](const BecInstance& g) { return splitting(g, SplitSub::AugPath); }},
      {"colorbn",
       [](const BecInstance& g) {
         int n = g.input_count;
         if (n < 1 || g != build_bn(n))
           throw std::invalid_argument("colorbn: instance is not a B_n graph");
         return color_bn(n);
       }},
  };
  return entries;
}

AlgorithmResult run_algorithm(const std::string& name, const BecInstance& g) {
  for (const auto& entry : algorithm_registry())
    if (entry.name == name) return entry.run(g);
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace bec

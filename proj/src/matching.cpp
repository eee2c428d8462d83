#include "bec/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace bec {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

IncrementalMatcher::IncrementalMatcher(int inputs, int outputs)
    : adj_(inputs),
      in_match_(inputs, -1),
      out_match_(outputs, -1),
      in_mate_(inputs, -1),
      out_mate_(outputs, -1),
      dist_(inputs),
      it_(inputs) {}

void IncrementalMatcher::add_edge(int edge_id, int input, int output) {
  adj_[input].push_back({output, edge_id});
}

bool IncrementalMatcher::bfs() {
  int n = static_cast<int>(adj_.size());
  queue_.clear();
  for (int u = 0; u < n; ++u) {
    if (in_mate_[u] == -1) {
      dist_[u] = 0;
      queue_.push_back(u);
    } else {
      dist_[u] = kInf;
    }
  }
  bool reachable = false;
  for (size_t qi = 0; qi < queue_.size(); ++qi) {
    int u = queue_[qi];
    for (const Arc& a : adj_[u]) {
      int w = out_mate_[a.output];
      if (w == -1) {
        reachable = true;
      } else if (dist_[w] == kInf) {
        dist_[w] = dist_[u] + 1;
        queue_.push_back(w);
      }
    }
  }
  return reachable;
}

bool IncrementalMatcher::dfs(int u) {
  for (size_t& i = it_[u]; i < adj_[u].size(); ++i) {
    const Arc& a = adj_[u][i];
    int w = out_mate_[a.output];
    if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
      in_mate_[u] = a.output;
      out_mate_[a.output] = u;
      in_match_[u] = a.edge;
      out_match_[a.output] = a.edge;
      return true;
    }
  }
  dist_[u] = kInf;
  return false;
}

int IncrementalMatcher::augment() {
  int n = static_cast<int>(adj_.size());
  while (bfs()) {
    std::fill(it_.begin(), it_.end(), 0);
    for (int u = 0; u < n; ++u)
      if (in_mate_[u] == -1 && dfs(u)) ++size_;
  }
  return size_;
}

std::vector<int> IncrementalMatcher::matched_edge_ids() const {
  std::vector<int> ids;
  for (int e : in_match_)
    if (e != -1) ids.push_back(e);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Matching max_matching(const BecInstance& g) {
  IncrementalMatcher m(g.input_count, g.output_count);
  for (int id = 0; id < g.edge_count(); ++id)
    m.add_edge(id, g.edges[id].input, g.edges[id].output);
  m.augment();
  return {m.matched_edge_ids()};
}

namespace {

// Restores class-q vertices into the matching by even alternating paths
// that shift matchedness away from a strictly lower-priority vertex on
// the same side. Cardinality never changes; classes are processed in
// increasing priority number, so earlier classes are never robbed.
class PrioritySolver {
 public:
  PrioritySolver(const BecInstance& g, const PriorityAssignment& prio)
      : g_(g), prio_(prio), in_adj_(g.input_count), out_adj_(g.output_count),
        in_match_(g.input_count, -1), out_match_(g.output_count, -1),
        in_seen_(g.input_count, 0), out_seen_(g.output_count, 0) {
    for (int id = 0; id < g.edge_count(); ++id) {
      in_adj_[g.edges[id].input].push_back(id);
      out_adj_[g.edges[id].output].push_back(id);
    }
  }

  Matching solve() {
    IncrementalMatcher m(g_.input_count, g_.output_count);
    for (int id = 0; id < g_.edge_count(); ++id)
      m.add_edge(id, g_.edges[id].input, g_.edges[id].output);
    m.augment();
    in_match_ = m.input_match();
    out_match_ = m.output_match();

    std::vector<int> classes;
    classes.insert(classes.end(), prio_.input_priority.begin(),
                   prio_.input_priority.end());
    classes.insert(classes.end(), prio_.output_priority.begin(),
                   prio_.output_priority.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    for (int q : classes) {
      for (int u = 0; u < g_.input_count; ++u)
        if (prio_.input_priority[u] == q && in_match_[u] == -1) {
          ++stamp_;
          steal_input(u, q);
        }
      for (int v = 0; v < g_.output_count; ++v)
        if (prio_.output_priority[v] == q && out_match_[v] == -1) {
          ++stamp_;
          steal_output(v, q);
        }
    }

    std::vector<int> ids;
    for (int e : in_match_)
      if (e != -1) ids.push_back(e);
    std::sort(ids.begin(), ids.end());
    return {ids};
  }

 private:
  // Even alternating path from unmatched input x: ...-(unmatched e)->
  // output y -(matched f)-> input z. If z's class is worse than q, z
  // gives up its match; otherwise recurse from z.
  bool steal_input(int x, int q) {
    for (int e : in_adj_[x]) {
      int y = g_.edges[e].output;
      if (out_seen_[y] == stamp_) continue;
      out_seen_[y] = stamp_;
      int f = out_match_[y];
      assert(f != -1);  // matching is maximum, so y cannot be free
      int z = g_.edges[f].input;
      if (in_seen_[z] == stamp_) continue;
      in_seen_[z] = stamp_;
      if (prio_.input_priority[z] > q) {
        in_match_[z] = -1;
        out_match_[y] = e;
        in_match_[x] = e;
        return true;
      }
      if (steal_input(z, q)) {
        out_match_[y] = e;
        in_match_[x] = e;
        return true;
      }
    }
    return false;
  }

  bool steal_output(int x, int q) {
    for (int e : out_adj_[x]) {
      int y = g_.edges[e].input;
      if (in_seen_[y] == stamp_) continue;
      in_seen_[y] = stamp_;
      int f = in_match_[y];
      assert(f != -1);
      int z = g_.edges[f].output;
      if (out_seen_[z] == stamp_) continue;
      out_seen_[z] = stamp_;
      if (prio_.output_priority[z] > q) {
        out_match_[z] = -1;
        in_match_[y] = e;
        out_match_[x] = e;
        return true;
      }
      if (steal_output(z, q)) {
        in_match_[y] = e;
        out_match_[x] = e;
        return true;
      }
    }
    return false;
  }

  const BecInstance& g_;
  const PriorityAssignment& prio_;
  std::vector<std::vector<int>> in_adj_, out_adj_;
  std::vector<int> in_match_, out_match_;
  std::vector<int> in_seen_, out_seen_;
  int stamp_ = 0;
};

}  // namespace

Matching priority_matching(const BecInstance& g,
                           const PriorityAssignment& prio) {
  if (static_cast<int>(prio.input_priority.size()) != g.input_count ||
      static_cast<int>(prio.output_priority.size()) != g.output_count)
    throw std::invalid_argument("priority_matching: priority size mismatch");
  for (int p : prio.input_priority)
    if (p < 1) throw std::invalid_argument("priority_matching: priority < 1");
  for (int p : prio.output_priority)
    if (p < 1) throw std::invalid_argument("priority_matching: priority < 1");
  return PrioritySolver(g, prio).solve();
}

Matching max_degree_matching(const BecInstance& g) {
  int delta = g.max_degree();
  PriorityAssignment prio;
  auto rank = [delta](int d) { return d == delta ? 1 : 2; };
  for (int d : g.degrees(Side::Input)) prio.input_priority.push_back(rank(d));
  for (int d : g.degrees(Side::Output)) prio.output_priority.push_back(rank(d));
  return priority_matching(g, prio);
}

}  // namespace bec

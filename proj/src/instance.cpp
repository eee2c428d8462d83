#include "bec/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bec {

int BecInstance::degree(Side side, int vertex) const {
  int limit = side == Side::Input ? input_count : output_count;
  if (vertex < 0 || vertex >= limit)
    throw std::out_of_range("degree: vertex index out of range");
  int d = 0;
  for (const Edge& e : edges) {
    int v = side == Side::Input ? e.input : e.output;
    if (v == vertex) ++d;
  }
  return d;
}

std::vector<int> BecInstance::degrees(Side side) const {
  std::vector<int> d(side == Side::Input ? input_count : output_count, 0);
  for (const Edge& e : edges) ++d[side == Side::Input ? e.input : e.output];
  return d;
}

int BecInstance::max_degree() const {
  int best = 0;
  for (int d : degrees(Side::Input)) best = std::max(best, d);
  for (int d : degrees(Side::Output)) best = std::max(best, d);
  return best;
}

int BecInstance::max_bound() const {
  int best = 0;
  for (const Edge& e : edges) best = std::max(best, e.bound);
  return best;
}

void BecInstance::check() const {
  if (input_count < 0 || output_count < 0)
    throw std::invalid_argument("instance: negative vertex count");
  for (const Edge& e : edges) {
    if (e.input < 0 || e.input >= input_count)
      throw std::invalid_argument("instance: edge input index out of range");
    if (e.output < 0 || e.output >= output_count)
      throw std::invalid_argument("instance: edge output index out of range");
    if (e.bound < 1) throw std::invalid_argument("instance: edge bound < 1");
  }
}

namespace {

Subgraph restrict_edges(const BecInstance& g, bool keep_geq, int k) {
  Subgraph s;
  s.graph.input_count = g.input_count;
  s.graph.output_count = g.output_count;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges[id];
    bool keep = keep_geq ? e.bound >= k : e.bound <= k;
    if (keep) {
      s.graph.edges.push_back(e);
      s.original_ids.push_back(id);
    }
  }
  return s;
}

}  // namespace

Subgraph subgraph_geq(const BecInstance& g, int k) {
  if (k < 1) throw std::invalid_argument("subgraph_geq: k must be >= 1");
  return restrict_edges(g, true, k);
}

Subgraph subgraph_leq(const BecInstance& g, int k) {
  if (k < 1) throw std::invalid_argument("subgraph_leq: k must be >= 1");
  return restrict_edges(g, false, k);
}

bool Coloring::is_complete() const {
  return std::ranges::all_of(colors, [](int c) { return c != kUncolored; });
}

int Coloring::max_color() const {
  int best = 0;
  for (int c : colors) best = std::max(best, c);
  return best;
}

Verdict validate_coloring(const BecInstance& g, const Coloring& c,
                          ValidateMode mode) {
  if (c.edge_count() != g.edge_count())
    throw std::invalid_argument("validate_coloring: coloring size mismatch");
  Verdict v;
  v.max_color = c.max_color();

  for (int id = 0; id < g.edge_count(); ++id) {
    int color = c.colors[id];
    if (color == Coloring::kUncolored) {
      if (mode == ValidateMode::Strict)
        v.violations.push_back({ViolationKind::Incomplete, id, -1});
      continue;
    }
    if (color < g.edges[id].bound)
      v.violations.push_back({ViolationKind::BoundViolation, id, -1});
  }

  // Conflicts: scan each vertex, remembering the first edge seen per
  // color. Parallel same-colored edges clash at both endpoints but are
  // reported once.
  std::vector<std::pair<int, int>> seen_pairs;
  auto scan_side = [&](Side side, int count) {
    std::vector<std::vector<std::pair<int, int>>> at(count);  // (color, edge)
    for (int id = 0; id < g.edge_count(); ++id) {
      int color = c.colors[id];
      if (color == Coloring::kUncolored) continue;
      int vtx = side == Side::Input ? g.edges[id].input : g.edges[id].output;
      at[vtx].push_back({color, id});
    }
    for (int vtx = 0; vtx < count; ++vtx) {
      auto& lst = at[vtx];
      std::stable_sort(lst.begin(), lst.end(),
                       [](auto& a, auto& b) { return a.first < b.first; });
      for (size_t i = 0; i + 1 < lst.size(); ++i) {
        if (lst[i].first != lst[i + 1].first) continue;
        auto pr = std::minmax(lst[i].second, lst[i + 1].second);
        std::pair<int, int> key{pr.first, pr.second};
        if (std::ranges::find(seen_pairs, key) == seen_pairs.end()) {
          seen_pairs.push_back(key);
          v.violations.push_back({ViolationKind::Conflict, key.first, key.second});
        }
      }
    }
  };
  scan_side(Side::Input, g.input_count);
  scan_side(Side::Output, g.output_count);

  v.valid = v.violations.empty();
  return v;
}

bool check_unique_input_bounds(const BecInstance& g) {
  std::vector<std::vector<int>> bounds(g.input_count);
  for (const Edge& e : g.edges) bounds[e.input].push_back(e.bound);
  for (auto& b : bounds) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  }
  return true;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Incomplete: return "incomplete";
    case ViolationKind::BoundViolation: return "bound-violation";
    case ViolationKind::Conflict: return "conflict";
  }
  return "?";
}

}  // namespace bec

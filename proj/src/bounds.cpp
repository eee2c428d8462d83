#include "bec/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bec/flow.hpp"
#include "bec/matching.hpp"

namespace bec {

namespace {

void require_edges(const BecInstance& g, const char* op) {
  if (g.edges.empty())
    throw std::invalid_argument(std::string(op) + ": instance has no edges");
}

}  // namespace

int degree_bound(const BecInstance& g) {
  require_edges(g, "degree_bound");

  // Sweep distinct bounds descending; G^k gains edges as k drops, so the
  // running max degree only grows. Bounds not present are dominated.
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges[a].bound > g.edges[b].bound;
  });

  std::vector<int> in_deg(g.input_count, 0), out_deg(g.output_count, 0);
  int cur_max = 0;
  int best = 0;
  size_t i = 0;
  while (i < order.size()) {
    int k = g.edges[order[i]].bound;
    while (i < order.size() && g.edges[order[i]].bound == k) {
      const Edge& e = g.edges[order[i]];
      cur_max = std::max(cur_max, ++in_deg[e.input]);
      cur_max = std::max(cur_max, ++out_deg[e.output]);
      ++i;
    }
    best = std::max(best, k + cur_max - 1);
  }
  return best;
}

int matching_bound(const BecInstance& g) {
  require_edges(g, "matching_bound");

  int bmax = g.max_bound();
  std::vector<std::vector<int>> by_bound(bmax + 1);
  for (int id = 0; id < g.edge_count(); ++id)
    by_bound[g.edges[id].bound].push_back(id);

  IncrementalMatcher matcher(g.input_count, g.output_count);
  long long total = g.edge_count();
  long long sum = 0;
  for (int k = 1;; ++k) {
    if (k <= bmax)
      for (int id : by_bound[k])
        matcher.add_edge(id, g.edges[id].input, g.edges[id].output);
    int mk = matcher.augment();
    sum += mk;
    if (sum >= total) return k;
    if (k >= bmax) {
      // m_i is constant from here on; finish arithmetically.
      return k + static_cast<int>((total - sum + mk - 1) / mk);
    }
  }
}

int flow_bound(const BecInstance& g) {
  require_edges(g, "flow_bound");

  int bmax = g.max_bound();
  int delta = g.max_degree();
  int last_fail = 0;  // re-test the previous witness first

  // When C - k >= maxdeg every minimum flow requirement is zero and the
  // zero flow is feasible, so only k > C - maxdeg needs solving.
  auto feasible_at = [&](int k, int C) {
    return feasible_flow(build_bound_flow(g, k, C)).has_value();
  };
  auto feasible_for_all_k = [&](int C) {
    int k_from = std::max(1, C - delta + 1);
    if (last_fail >= k_from && last_fail <= bmax && !feasible_at(last_fail, C))
      return false;
    for (int k = k_from; k <= bmax; ++k) {
      if (k == last_fail) continue;
      if (!feasible_at(k, C)) {
        last_fail = k;
        return false;
      }
    }
    return true;
  };

  int lo = std::max(degree_bound(g), matching_bound(g));
  int hi = bmax + delta - 1;
  int verified = -1;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (feasible_for_all_k(mid)) {
      hi = mid;
      verified = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo != verified && !feasible_for_all_k(lo))
    throw std::logic_error("flow_bound: no feasible C in search window");
  return lo;
}

BoundReport best_lower_bound(const BecInstance& g, bool include_flow) {
  require_edges(g, "best_lower_bound");
  BoundReport r;
  r.degree_bound = degree_bound(g);
  r.matching_bound = matching_bound(g);
  r.best = std::max(r.degree_bound, r.matching_bound);
  if (include_flow) {
    r.flow_bound = flow_bound(g);
    r.best = std::max(r.best, *r.flow_bound);
  }
  return r;
}

std::string BoundReport::csv_row(const std::string& label) const {
  std::ostringstream out;
  out << label << "," << degree_bound << "," << matching_bound << ",";
  if (flow_bound) out << *flow_bound;
  out << "," << best;
  return out.str();
}

}  // namespace bec

#include "bec/flow.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bec {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Max flow in compressed adjacency form; per-node vectors are too slow
// for the chain networks of the bound computation (~200k nodes).
class Dinic {
 public:
  explicit Dinic(int nodes) : n_(nodes) {}

  // Returns an arc handle for later residual queries.
  int add_arc(int from, int to, int cap) {
    from_.push_back(from);
    to_in_.push_back(to);
    cap_in_.push_back(cap);
    return static_cast<int>(from_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    build();
    long long total = 0;
    while (bfs(s, t)) {
      it_ = start_;
      while (long long pushed = dfs(s, t, kInf)) total += pushed;
    }
    return total;
  }

  int residual(int handle) const { return cap_[slot_[handle]]; }

 private:
  void build() {
    int m = static_cast<int>(from_.size());
    start_.assign(n_ + 1, 0);
    for (int i = 0; i < m; ++i) {
      ++start_[from_[i] + 1];
      ++start_[to_in_[i] + 1];
    }
    for (int v = 0; v < n_; ++v) start_[v + 1] += start_[v];
    std::vector<int> fill = start_;
    to_.resize(2 * m);
    cap_.resize(2 * m);
    rev_.resize(2 * m);
    slot_.resize(m);
    for (int i = 0; i < m; ++i) {
      int a = fill[from_[i]]++;
      int b = fill[to_in_[i]]++;
      slot_[i] = a;
      to_[a] = to_in_[i];
      cap_[a] = cap_in_[i];
      rev_[a] = b;
      to_[b] = from_[i];
      cap_[b] = 0;
      rev_[b] = a;
    }
  }

  bool bfs(int s, int t) {
    level_.assign(n_, -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (size_t qi = 0; qi < queue_.size(); ++qi) {
      int u = queue_[qi];
      for (int a = start_[u]; a < start_[u + 1]; ++a) {
        if (cap_[a] > 0 && level_[to_[a]] == -1) {
          level_[to_[a]] = level_[u] + 1;
          queue_.push_back(to_[a]);
        }
      }
    }
    return level_[t] != -1;
  }

  long long dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a < start_[u + 1]; ++a) {
      if (cap_[a] <= 0 || level_[to_[a]] != level_[u] + 1) continue;
      long long pushed = dfs(to_[a], t, std::min<long long>(limit, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= static_cast<int>(pushed);
        cap_[rev_[a]] += static_cast<int>(pushed);
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  std::vector<int> from_, to_in_, cap_in_;
  std::vector<int> start_, to_, cap_, rev_, slot_;
  std::vector<int> level_, it_, queue_;
};

void require_range(int k, int C) {
  if (k < 1 || k > C)
    throw std::invalid_argument("flow network: need 1 <= k <= C");
}

int min_requirement(int degree, int k, int C) {
  return std::max(0, degree - (C - k));
}

}  // namespace

FlowNetwork build_bound_flow(const BecInstance& g, int k, int C) {
  require_range(k, C);
  FlowNetwork net;
  net.source = 0;
  net.sink = 1;
  net.node_count = 2 + (g.input_count + g.output_count) * k;

  auto in_node = [&](int u, int i) { return 2 + u * k + (i - 1); };
  auto out_node = [&](int v, int i) {
    return 2 + (g.input_count + v) * k + (i - 1);
  };

  std::vector<int> in_deg = g.degrees(Side::Input);
  std::vector<int> out_deg = g.degrees(Side::Output);

  for (int u = 0; u < g.input_count; ++u) {
    net.arcs.push_back(
        {net.source, in_node(u, 1), k, min_requirement(in_deg[u], k, C)});
    for (int i = 1; i <= k - 1; ++i)
      net.arcs.push_back({in_node(u, i), in_node(u, i + 1), k - i, 0});
  }
  for (int v = 0; v < g.output_count; ++v) {
    net.arcs.push_back(
        {out_node(v, 1), net.sink, k, min_requirement(out_deg[v], k, C)});
    for (int i = 1; i <= k - 1; ++i)
      net.arcs.push_back({out_node(v, i + 1), out_node(v, i), k - i, 0});
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges[id];
    if (e.bound > k) continue;
    net.arcs.push_back(
        {in_node(e.input, e.bound), out_node(e.output, e.bound), 1, 0, id});
  }
  return net;
}

FlowNetwork build_split_flow(const BecInstance& g, int k, int C) {
  require_range(k, C);
  FlowNetwork net;
  net.source = 0;
  net.sink = 1;
  net.node_count = 2 + g.input_count + g.output_count;

  auto in_node = [&](int u) { return 2 + u; };
  auto out_node = [&](int v) { return 2 + g.input_count + v; };

  std::vector<int> in_deg = g.degrees(Side::Input);
  std::vector<int> out_deg = g.degrees(Side::Output);

  for (int u = 0; u < g.input_count; ++u)
    net.arcs.push_back(
        {net.source, in_node(u), k, min_requirement(in_deg[u], k, C)});
  for (int v = 0; v < g.output_count; ++v)
    net.arcs.push_back(
        {out_node(v), net.sink, k, min_requirement(out_deg[v], k, C)});
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges[id];
    if (e.bound > k) continue;
    net.arcs.push_back({in_node(e.input), out_node(e.output), 1, 0, id});
  }
  return net;
}

std::optional<std::vector<int>> feasible_flow(const FlowNetwork& net) {
  for (const FlowArc& a : net.arcs)
    if (a.lower > a.capacity) return std::nullopt;

  // Standard excess transform: route each lower bound as mandatory flow,
  // balance node excesses through a super source/sink, close the s-t
  // circulation, and demand saturation of every excess arc.
  int super_s = net.node_count;
  int super_t = net.node_count + 1;
  Dinic dinic(net.node_count + 2);

  std::vector<int> handles(net.arcs.size());
  std::vector<long long> excess(net.node_count, 0);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    handles[i] = dinic.add_arc(a.from, a.to, a.capacity - a.lower);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  dinic.add_arc(net.sink, net.source, kInf);

  long long need = 0;
  for (int v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      dinic.add_arc(super_s, v, static_cast<int>(excess[v]));
      need += excess[v];
    } else if (excess[v] < 0) {
      dinic.add_arc(v, super_t, static_cast<int>(-excess[v]));
    }
  }

  if (dinic.max_flow(super_s, super_t) < need) return std::nullopt;

  std::vector<int> flow(net.arcs.size());
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    flow[i] = a.lower + (a.capacity - a.lower - dinic.residual(handles[i]));
  }
  return flow;
}

std::optional<SplitResult> split(const BecInstance& g, int k, int C) {
  FlowNetwork net = build_split_flow(g, k, C);
  auto flow = feasible_flow(net);
  if (!flow) return std::nullopt;

  std::vector<char> in_h(g.edge_count(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i)
    if (net.arcs[i].tag >= 0 && (*flow)[i] > 0) in_h[net.arcs[i].tag] = 1;

  SplitResult r;
  for (int id = 0; id < g.edge_count(); ++id)
    (in_h[id] ? r.h_edge_ids : r.j_edge_ids).push_back(id);
  return r;
}

std::string dump_network(const FlowNetwork& net) {
  std::ostringstream out;
  out << "nodes " << net.node_count << " source " << net.source << " sink "
      << net.sink << "\n";
  for (const FlowArc& a : net.arcs) {
    out << a.from << " " << a.to << " " << a.lower << " " << a.capacity;
    if (a.tag >= 0) out << " edge " << a.tag;
    out << "\n";
  }
  return out.str();
}

}  // namespace bec

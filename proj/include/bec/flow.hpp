#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bec/instance.hpp"

namespace bec {

// Directed arc with capacity and a minimum flow requirement. `tag` links
// a core arc back to the instance edge it stands for (-1 = structural).
struct FlowArc {
  int from = 0;
  int to = 0;
  int capacity = 0;
  int lower = 0;
  int tag = -1;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
};

// Chain form of the bound network for colors 1..k inside a budget of C
// colors. Per input u: chain u_1..u_k with arcs (u_i, u_{i+1}) of
// capacity k-i, and (s, u_1) with capacity k and minimum flow
// max{0, deg(u) - (C-k)}. Outputs are mirrored into t. Each edge of G_k
// with bound i contributes a unit core arc (u_i, v_i). Core arcs with
// positive flow induce a subgraph of G_k whose degree bound is <= k.
FlowNetwork build_bound_flow(const BecInstance& g, int k, int C);

// Collapsed form: one node per vertex, (s, u) of capacity k with the
// same minimum flow, unit core arcs for G_k edges. Positive-flow core
// arcs induce H_k with max degree <= k (degree constraint only).
FlowNetwork build_split_flow(const BecInstance& g, int k, int C);

// Integer flow meeting conservation, capacities and minimum flow
// requirements, as one value per arc (in arc order), or nullopt when
// none exists. Arcs with lower > capacity short-circuit to infeasible.
// Deterministic for a fixed network.
std::optional<std::vector<int>> feasible_flow(const FlowNetwork& net);

// Partition of an instance's edge ids into H_k (core arcs with flow)
// and J_k (the rest). On success H_k is a subgraph of G_k with max
// degree <= k and J_k has max degree <= C-k.
struct SplitResult {
  std::vector<int> h_edge_ids;
  std::vector<int> j_edge_ids;
};

std::optional<SplitResult> split(const BecInstance& g, int k, int C);

// DIMACS-like text dump for diffing; not a compatibility promise.
std::string dump_network(const FlowNetwork& net);

}  // namespace bec

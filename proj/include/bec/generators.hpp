#pragma once

#include <cstdint>
#include <filesystem>

#include "bec/instance.hpp"

namespace bec {

// The adversarial family: n inputs u_1..u_n, 2n-1 outputs v_1..v_{2n-1}.
// For 1<=j<=i there is an edge (u_i, v_j) with bound j; for i<j<=n there
// is an edge (u_i, v_{n+i}) with bound j (parallel edges with distinct
// bounds). Edge ids are assigned input-major, bound-ascending. Every
// input carries bounds 1..n exactly once.
BecInstance build_bn(int n);

// Parameters for a random regular instance with unique input bounds.
struct RandomSpec {
  int n = 1;          // vertices per side
  int delta = 1;      // regular degree
  int bmax = 1;       // bounds drawn from 1..bmax, requires bmax >= delta
  uint64_t seed = 0;  // reproducibility seed

  friend bool operator==(const RandomSpec&, const RandomSpec&) = default;
};

// Union of delta uniformly random permutations of the outputs (one edge
// per input per permutation; parallel edges are kept), then each input's
// delta edges receive distinct bounds sampled without replacement from
// 1..bmax. Driven by mt19937-64 with modulo-reduced draws and
// Fisher-Yates shuffles, so identical specs give identical instances on
// any platform.
BecInstance gen_random(const RandomSpec& spec);

// A partial edge coloring completion instance: the bound field of
// `graph` is reused as a precolor (0 = uncolored, otherwise a color in
// 1..k). Precolored edges must form a proper partial edge coloring.
struct PartialColoredGraph {
  BecInstance graph;
  int k = 1;  // target maximum color
};

// Throws std::invalid_argument if the precoloring is out of range or
// improper.
void check_partial(const PartialColoredGraph& g);

// Emits the hardness construction with unique input bounds: uncolored
// edges keep their endpoints and get distinct bounds in k+1..2k per
// input (ascending edge-id order); an edge precolored k-i becomes a
// two-outer-edge gadget with i inner parallel edges, all bounds shifted
// up by 2k; every input gets a forcing component that pins its k+1..2k
// color slots. The result satisfies check_unique_input_bounds and is
// colorable with max color <= 3k iff the partial coloring of `g`
// completes with colors 1..k.
BecInstance reduce_completion(const PartialColoredGraph& g);

// Partial-instance text format:
//   becp 1
//   <input_count> <output_count> <edge_count> <k>
//   <input_index> <output_index> <precolor>   (0 = uncolored)
PartialColoredGraph read_partial(const std::filesystem::path& path);
void write_partial(const PartialColoredGraph& g,
                   const std::filesystem::path& path);

}  // namespace bec

#pragma once

#include <optional>
#include <string>

#include "bec/instance.hpp"

namespace bec {

// The three lower bounds on the optimal max color. All require at least
// one edge and throw std::invalid_argument otherwise.

// max over bound values k present of k + maxdeg(G^k) - 1.
int degree_bound(const BecInstance& g);

// Least k with |matching(G_1)| + ... + |matching(G_k)| >= |E|.
int matching_bound(const BecInstance& g);

// Least C such that the bound network is feasible for every k in
// [1, b_max]; binary search over [max(D, M), b_max + maxdeg - 1].
int flow_bound(const BecInstance& g);

struct BoundReport {
  int degree_bound = 0;
  int matching_bound = 0;
  std::optional<int> flow_bound;  // expensive; computed on request
  int best = 0;                   // max of the computed values

  // One CSV row: instance,D,M,P,best (P empty when not computed).
  std::string csv_row(const std::string& label) const;
};

BoundReport best_lower_bound(const BecInstance& g, bool include_flow);

}  // namespace bec

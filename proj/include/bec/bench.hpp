#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bec/instance.hpp"

namespace bec {

enum class Study { Random, Bn };

struct ExperimentConfig {
  Study study = Study::Random;

  // Random study: n inputs and n outputs per instance, degree swept over
  // delta_min..delta_max in steps of delta_step, b_max = delta +
  // bmax_offset unless bmax_fixed is set.
  int n = 100;
  int delta_min = 5;
  int delta_max = 50;
  int delta_step = 5;
  int bmax_offset = 3;
  std::optional<int> bmax_fixed;

  // Bn study sizes.
  std::vector<int> bn_sizes = {4, 8, 16, 32, 64};

  int trials = 10;
  uint64_t seed = 1;
  std::vector<std::string> algorithms;  // registry names
  std::vector<std::string> bounds;      // "degree", "matching", "flow"

  void validate() const;  // throws std::invalid_argument
};

// One CSV record: study,label,seed,n,delta,bmax,name,kind,value,ms
struct ResultRow {
  std::string study;
  std::string label;
  uint64_t seed = 0;
  int n = 0;
  int delta = 0;
  int bmax = 0;
  std::string name;
  std::string kind;  // "bound" or "alg"
  int value = 0;
  double ms = 0.0;
};

// Runs the configured study. Every coloring is re-verified before its
// row is emitted; rows are ordered by (point, trial, bounds, algorithms)
// and are byte-identical across runs with the same config except for
// the ms column.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);

// Gnuplot-ready series: one block per name with lines
// "<x> <mean(value - delta)> <stddev>", where x is delta (random study)
// or n (Bn study).
void write_dat(const std::vector<ResultRow>& rows, std::ostream& out);

}  // namespace bec

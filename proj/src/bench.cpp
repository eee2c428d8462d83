#include "bec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bec/algorithms.hpp"
#include "bec/bounds.hpp"
#include "bec/generators.hpp"

namespace bec {

namespace {

using Clock = std::chrono::steady_clock;

// splitmix64; decorrelates per-instance seeds from the config seed.
uint64_t mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b) {
  return mix(mix(base ^ mix(a)) ^ mix(b));
}

int bound_by_name(const std::string& name, const BecInstance& g) {
  if (name == "degree") return degree_bound(g);
  if (name == "matching") return matching_bound(g);
  if (name == "flow") return flow_bound(g);
  throw std::invalid_argument("unknown bound: " + name);
}

struct Point {
  std::string label;
  uint64_t seed;
  int n, delta, bmax;
  BecInstance instance;
};

void run_point(const ExperimentConfig& config, const Point& pt,
               const std::string& study_name, std::vector<ResultRow>& rows) {
  std::vector<int> bound_values;
  for (const std::string& bname : config.bounds) {
    auto t0 = Clock::now();
    int value = bound_by_name(bname, pt.instance);
    double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bound_values.push_back(value);
    rows.push_back({study_name, pt.label, pt.seed, pt.n, pt.delta, pt.bmax,
                    bname, "bound", value, ms});
  }
  for (const std::string& aname : config.algorithms) {
    AlgorithmResult res = run_algorithm(aname, pt.instance);
    Verdict verdict = validate_coloring(pt.instance, res.coloring);
    if (!verdict.valid)
      throw std::logic_error("bench: algorithm " + aname +
                             " produced an invalid coloring on " + pt.label);
    for (int bv : bound_values)
      if (res.max_color < bv)
        throw std::logic_error("bench: max color below a lower bound on " +
                               pt.label);
    rows.push_back({study_name, pt.label, pt.seed, pt.n, pt.delta, pt.bmax,
                    aname, "alg", res.max_color, res.stats.elapsed_ms});
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  for (const std::string& aname : algorithms) {
    bool known = false;
    for (const auto& entry : algorithm_registry())
      if (entry.name == aname) known = true;
    if (!known) throw std::invalid_argument("bench: unknown algorithm " + aname);
  }
  for (const std::string& bname : bounds)
    if (bname != "degree" && bname != "matching" && bname != "flow")
      throw std::invalid_argument("bench: unknown bound " + bname);
  if (study == Study::Random) {
    if (n < 1) throw std::invalid_argument("bench: n must be >= 1");
    if (delta_min < 1 || delta_min > delta_max || delta_max > n)
      throw std::invalid_argument("bench: bad degree range");
    if (delta_step < 1) throw std::invalid_argument("bench: bad degree step");
    if (!bmax_fixed && bmax_offset < 0)
      throw std::invalid_argument("bench: bad bmax offset");
  } else {
    if (bn_sizes.empty())
      throw std::invalid_argument("bench: no Bn sizes given");
    for (int s : bn_sizes)
      if (s < 1) throw std::invalid_argument("bench: Bn size must be >= 1");
  }
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ResultRow> rows;

  if (config.study == Study::Random) {
    for (int delta = config.delta_min; delta <= config.delta_max;
         delta += config.delta_step) {
      int bmax = config.bmax_fixed ? *config.bmax_fixed
                                   : delta + config.bmax_offset;
      for (int trial = 0; trial < config.trials; ++trial) {
        Point pt;
        pt.seed = derive_seed(config.seed, static_cast<uint64_t>(delta),
                              static_cast<uint64_t>(trial));
        pt.n = config.n;
        pt.delta = delta;
        pt.bmax = bmax;
        pt.instance = gen_random({config.n, delta, bmax, pt.seed});
        std::ostringstream label;
        label << "random-n" << config.n << "-d" << delta << "-t" << trial;
        pt.label = label.str();
        run_point(config, pt, "random", rows);
      }
    }
  } else {
    for (int size : config.bn_sizes) {
      Point pt;
      pt.seed = config.seed;
      pt.instance = build_bn(size);
      pt.n = size;
      pt.delta = pt.instance.max_degree();
      pt.bmax = pt.instance.max_bound();
      pt.label = "b" + std::to_string(size);
      run_point(config, pt, "bn", rows);
    }
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "study,label,seed,n,delta,bmax,name,kind,value,ms\n";
  for (const ResultRow& r : rows) {
    out << r.study << "," << r.label << "," << r.seed << "," << r.n << ","
        << r.delta << "," << r.bmax << "," << r.name << "," << r.kind << ","
        << r.value << "," << r.ms << "\n";
  }
}

void write_dat(const std::vector<ResultRow>& rows, std::ostream& out) {
  // series name -> x -> values of (max color - delta)
  std::map<std::string, std::map<int, std::vector<int>>> series;
  for (const ResultRow& r : rows) {
    int x = r.study == "bn" ? r.n : r.delta;
    series[r.name][x].push_back(r.value - r.delta);
  }
  bool first = true;
  for (const auto& [name, points] : series) {
    if (!first) out << "\n\n";
    first = false;
    out << "# series: " << name << "\n";
    for (const auto& [x, vals] : points) {
      double mean = 0;
      for (int v : vals) mean += v;
      mean /= static_cast<double>(vals.size());
      double var = 0;
      for (int v : vals) var += (v - mean) * (v - mean);
      double sd = vals.size() > 1
                      ? std::sqrt(var / static_cast<double>(vals.size() - 1))
                      : 0.0;
      out << x << " " << mean << " " << sd << "\n";
    }
  }
}

}  // namespace bec

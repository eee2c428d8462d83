// Acceptance suite: runs every gate criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code = number of
// failed criteria. --quick replaces the full-scale random study with
// the small profile only.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bec/algorithms.hpp"
#include "bec/bench.hpp"
#include "bec/bounds.hpp"
#include "bec/flow.hpp"
#include "bec/generators.hpp"
#include "bec/instance.hpp"
#include "bec/matching.hpp"
#include "oracles.hpp"

using namespace bec;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

// ---- criterion 1: B_n lower-bound table ------------------------------

void bn_bound_table(Check& c) {
  const std::vector<std::pair<int, int>> matching_table = {
      {4, 5}, {7, 9}, {8, 10}, {64, 80}, {256, 320}};
  for (auto [n, want] : matching_table) {
    int got = matching_bound(build_bn(n));
    c.expect(got == want, fmt("matching_bound(B_%d) = %d, want %d", n, got, want));
    c.expect(want == (5 * n + 3) / 4, fmt("table value for n=%d is not ceil(5n/4)", n));
  }
  const std::vector<std::pair<int, int>> flow_table = {
      {8, 11}, {64, 83}, {256, 331}};
  for (auto [n, want] : flow_table) {
    int got = flow_bound(build_bn(n));
    c.expect(got == want, fmt("flow_bound(B_%d) = %d, want %d", n, got, want));
  }
  for (int n : {4, 7, 8, 64, 256}) {
    int got = degree_bound(build_bn(n));
    c.expect(got == n, fmt("degree_bound(B_%d) = %d, want %d", n, got, n));
  }
}

// ---- criterion 2: closed-form B_n coloring ---------------------------

void closed_form_coloring(Check& c) {
  auto check_n = [&](int n) {
    BecInstance g = build_bn(n);
    AlgorithmResult r = color_bn(n);
    Verdict v = validate_coloring(g, r.coloring);
    c.expect(v.valid, fmt("color_bn(%d) fails validation", n));
    int want = n + (n + 1) / 3;  // n + ceil((n-1)/3)
    c.expect(r.max_color == want,
             fmt("color_bn(%d) max color %d, want %d", n, r.max_color, want));
  };
  for (int n = 2; n <= 64; ++n) check_n(n);
  check_n(256);
  c.expect(color_bn(7).max_color == 9, "color_bn(7) != 9");
  c.expect(color_bn(64).max_color == 85, "color_bn(64) != 85");
  c.expect(color_bn(256).max_color == 341, "color_bn(256) != 341");
}

// ---- criterion 3: exact oracle vs enumerator -------------------------

void exact_vs_enumerator(Check& c) {
  ExactResult b4 = exact(build_bn(4));
  c.expect(b4.optimum == 5 && b4.status == ExactStatus::Proved,
           fmt("exact(B_4) = %d (%s), want 5 PROVED", b4.optimum,
               b4.status == ExactStatus::Proved ? "PROVED" : "TIMEOUT"));

  std::mt19937_64 rng(20150707);
  int done = 0;
  while (done < 200) {
    BecInstance g = test::random_small(rng, 4, 8, 4);
    if (g.edges.empty()) continue;
    ++done;
    ExactResult r = exact(g);
    c.expect(r.status == ExactStatus::Proved,
             fmt("instance %d: exact did not prove", done));
    int want = test::brute_force_optimum(g);
    c.expect(r.optimum == want,
             fmt("instance %d: exact %d vs enumerator %d", done, r.optimum, want));
    c.expect(validate_coloring(g, r.coloring).valid,
             fmt("instance %d: exact witness invalid", done));
  }
}

// ---- criterion 4: approximation guarantees ---------------------------

void approximation_guarantees(Check& c) {
  std::vector<BecInstance> corpus;
  for (int n = 1; n <= 3; ++n) corpus.push_back(build_bn(n));
  corpus.push_back(test::make(1, 1, {{0, 0, 1}, {0, 0, 2}, {0, 0, 5}}));
  corpus.push_back(test::make(2, 2, {{0, 0, 4}, {0, 1, 2}, {1, 0, 1}, {1, 1, 3}}));
  std::mt19937_64 rng(424242);
  while (corpus.size() < 150) {
    BecInstance g = test::random_small(rng, 4, 10, 5);
    if (!g.edges.empty()) corpus.push_back(g);
  }

  int idx = 0;
  for (const BecInstance& g : corpus) {
    ++idx;
    ExactResult best = exact(g);
    c.expect(best.status == ExactStatus::Proved,
             fmt("corpus %d: exact did not prove", idx));
    int cstar = best.optimum;
    int bmax = g.max_bound();
    int delta = g.max_degree();

    AlgorithmResult triv = trivial_shift(g);
    c.expect(validate_coloring(g, triv.coloring).valid,
             fmt("corpus %d: trivial invalid", idx));
    c.expect(triv.max_color < 2 * cstar,
             fmt("corpus %d: trivial %d !< 2*%d", idx, triv.max_color, cstar));

    AlgorithmResult sp = splitting(g);
    c.expect(validate_coloring(g, sp.coloring).valid,
             fmt("corpus %d: splitting invalid", idx));
    c.expect(sp.max_color <= bmax / 2 + cstar,
             fmt("corpus %d: splitting %d > %d", idx, sp.max_color,
                 bmax / 2 + cstar));

    for (const char* name : {"augpath", "match-degree", "match-priority"}) {
      AlgorithmResult r = run_algorithm(name, g);
      c.expect(validate_coloring(g, r.coloring).valid,
               fmt("corpus %d: %s invalid", idx, name));
      c.expect(r.max_color <= bmax + delta - 1,
               fmt("corpus %d: %s %d > %d", idx, name, r.max_color,
                   bmax + delta - 1));
    }
  }
}

// ---- criterion 5: random-study replication ---------------------------

void random_study(Check& c, bool small_profile) {
  ExperimentConfig cfg;
  cfg.study = Study::Random;
  cfg.n = small_profile ? 40 : 100;
  cfg.delta_min = 5;
  cfg.delta_max = small_profile ? 20 : 50;
  cfg.delta_step = 5;
  cfg.bmax_offset = 3;
  cfg.trials = 10;
  cfg.seed = 20150707;
  cfg.algorithms = {"greedy", "augpath", "match-priority"};
  cfg.bounds = {"flow"};
  std::vector<ResultRow> rows = run_experiment(cfg);

  std::map<std::string, std::map<std::string, int>> by_instance;
  for (const ResultRow& r : rows) by_instance[r.label][r.name] = r.value;
  int equal = 0, total = 0;
  for (auto& [label, vals] : by_instance) {
    ++total;
    if (vals.at("match-priority") == vals.at("flow")) ++equal;
  }
  c.expect(equal * 100 >= total * 95,
           fmt("priority == flow on %d/%d instances (< 95%%)", equal, total));

  std::map<int, std::map<std::string, std::vector<int>>> by_point;
  for (const ResultRow& r : rows) by_point[r.delta][r.name].push_back(r.value);
  for (auto& [delta, series] : by_point) {
    auto mean = [&](const char* name) {
      const auto& v = series.at(name);
      double sum = 0;
      for (int x : v) sum += x;
      return sum / static_cast<double>(v.size());
    };
    double prio = mean("match-priority");
    c.expect(mean("greedy") < 1.07 * prio,
             fmt("delta %d: greedy mean %.2f exceeds priority %.2f by >= 7%%",
                 delta, mean("greedy"), prio));
    c.expect(mean("augpath") < 1.07 * prio,
             fmt("delta %d: augpath mean %.2f exceeds priority %.2f by >= 7%%",
                 delta, mean("augpath"), prio));
  }
}

// ---- criterion 6: B_n study replication ------------------------------

void bn_study(Check& c) {
  bool maxsize_ever_worse_or_equal = false;
  for (int n : {4, 8, 16, 32, 64}) {
    BecInstance g = build_bn(n);
    int flow = flow_bound(g);
    int prio = matching_series(g, SeriesVariant::Priority).max_color;
    int mdeg = matching_series(g, SeriesVariant::MaxDegree).max_color;
    int msize = matching_series(g, SeriesVariant::MaxSize).max_color;
    int aug = augmenting_path(g).max_color;
    c.expect(prio <= flow + 3,
             fmt("B_%d: priority %d > flow bound %d + 3", n, prio, flow));
    c.expect(mdeg <= flow + 3,
             fmt("B_%d: max-degree %d > flow bound %d + 3", n, mdeg, flow));
    if (msize >= aug) maxsize_ever_worse_or_equal = true;
  }
  c.expect(maxsize_ever_worse_or_equal,
           "max-size matching beat the augmenting path on every B_n");
}

// ---- criterion 7: reduction correctness ------------------------------

void reduction_correctness(Check& c) {
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 50) {
    PartialColoredGraph pg = test::random_partial(rng, 3, 6, 3);
    ++done;
    BecInstance reduced = reduce_completion(pg);
    c.expect(check_unique_input_bounds(reduced),
             fmt("reduction %d: unique input bounds violated", done));
    DecideResult dec = color_within(reduced, 3 * pg.k);
    c.expect(dec.status != DecideStatus::Timeout,
             fmt("reduction %d: decision timed out", done));
    bool can = test::completion_exists(pg);
    c.expect(can == (dec.status == DecideStatus::Found),
             fmt("reduction %d: completion %d vs reduced<=3k %d", done,
                 can ? 1 : 0, dec.status == DecideStatus::Found ? 1 : 0));
  }
}

// ---- criterion 8: invariant suite ------------------------------------

void invariant_suite(Check& c) {
  std::vector<BecInstance> corpus;
  for (int n = 1; n <= 8; ++n) corpus.push_back(build_bn(n));
  corpus.push_back(build_bn(16));
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 30; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    int delta = 1 + static_cast<int>(rng() % n);
    corpus.push_back(gen_random({n, delta, delta + 2, rng()}));
  }
  for (int i = 0; i < 50; ++i) {
    BecInstance g = test::random_small(rng, 5, 12, 5);
    if (!g.edges.empty()) corpus.push_back(g);
  }

  int idx = 0;
  for (const BecInstance& g : corpus) {
    ++idx;
    BoundReport bounds = best_lower_bound(g, g.edge_count() <= 40);
    for (const auto& entry : algorithm_registry()) {
      if (entry.name == "colorbn" && g != build_bn(g.input_count)) continue;
      AlgorithmResult r = entry.run(g);
      c.expect(validate_coloring(g, r.coloring).valid,
               fmt("corpus %d: %s invalid", idx, entry.name.c_str()));
      c.expect(r.max_color >= bounds.best,
               fmt("corpus %d: %s max %d below bound %d", idx,
                   entry.name.c_str(), r.max_color, bounds.best));
    }
  }

  int probes = 0;
  while (probes < 100) {
    BecInstance g = test::random_small(rng, 4, 9, 4);
    if (g.edges.empty()) continue;
    ++probes;
    int k = 1 + static_cast<int>(rng() % g.max_bound());
    bool seen = false;
    for (int C = k; C <= k + g.max_degree() + 1; ++C) {
      bool ok = feasible_flow(build_bound_flow(g, k, C)).has_value();
      if (seen && !ok)
        c.expect(false, fmt("probe %d: feasibility regressed at C=%d", probes, C));
      seen = seen || ok;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") quick = true;

  struct Criterion {
    std::string name;
    double budget_secs;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {"B_n lower-bound table (matching/flow/degree)", 300, bn_bound_table},
      {"closed-form B_n coloring, max color n+ceil((n-1)/3)", 60,
       closed_form_coloring},
      {"exact oracle: B_4 and 200 random instances vs enumerator", 300,
       exact_vs_enumerator},
      {"approximation guarantees on the proved corpus", 300,
       approximation_guarantees},
      {quick ? "random-study replication (small profile)"
             : "random-study replication (full scale + small profile)",
       quick ? 180.0 : 1800.0 + 180.0,
       [quick](Check& c) {
         if (!quick) random_study(c, false);
         random_study(c, true);
       }},
      {"B_n study replication", 600, bn_study},
      {"reduction correctness (50 random instances)", 600,
       reduction_correctness},
      {"invariant suite (validation, bound soundness, monotone feasibility)",
       600, invariant_suite},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    criteria[i].run(c);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    c.expect(secs < criteria[i].budget_secs,
             fmt("over time budget: %.1fs >= %.0fs", secs,
                 criteria[i].budget_secs));
    std::printf("[%zu] %s  %s (%.1fs)\n", i + 1, c.ok ? "PASS" : "FAIL",
                criteria[i].name.c_str(), secs);
    if (!c.ok) {
      std::fputs(c.log.str().c_str(), stdout);
      ++failures;
    }
  }
  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures;
}

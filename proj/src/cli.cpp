#include "bec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bec/algorithms.hpp"
#include "bec/bench.hpp"
#include "bec/bounds.hpp"
#include "bec/generators.hpp"
#include "bec/io.hpp"

namespace bec {

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_verdict(const Verdict& v, std::ostream& out) {
  if (v.valid) {
    out << "VALID max_color " << v.max_color << "\n";
    return;
  }
  out << "INVALID max_color " << v.max_color << "\n";
  for (const Violation& viol : v.violations) {
    out << "  " << to_string(viol.kind) << " edge " << viol.edge;
    if (viol.other_edge >= 0) out << " edge " << viol.other_edge;
    out << "\n";
  }
}

struct GenOptions {
  std::string family;
  std::string output;
  std::string input;  // reduce only
  int n = 4;
  int delta = 2;
  int bmax = 0;  // 0 = delta + 3
  uint64_t seed = 1;
};

int cmd_gen(const GenOptions& opt) {
  if (opt.family == "bn") {
    write_instance(build_bn(opt.n), opt.output);
  } else if (opt.family == "random") {
    RandomSpec spec{opt.n, opt.delta, opt.bmax ? opt.bmax : opt.delta + 3,
                    opt.seed};
    BecInstance g = gen_random(spec);
    std::ostringstream comment;
    comment << "seed " << spec.seed << " generator mt19937-64-fisher-yates"
            << " n " << spec.n << " delta " << spec.delta << " bmax "
            << spec.bmax;
    write_instance(g, opt.output, {comment.str()});
  } else if (opt.family == "reduce") {
    if (opt.input.empty())
      throw std::invalid_argument("gen reduce: --input is required");
    write_instance(reduce_completion(read_partial(opt.input)), opt.output);
  } else {
    throw std::invalid_argument("gen: unknown family " + opt.family);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"bounded edge coloring toolkit"};
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------
  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", gen_opt.family, "bn | random | reduce")
      ->required();
  gen->add_option("--n", gen_opt.n, "size parameter");
  gen->add_option("--delta", gen_opt.delta, "regular degree (random)");
  gen->add_option("--bmax", gen_opt.bmax, "bound range (random, default delta+3)");
  gen->add_option("--seed", gen_opt.seed, "random seed");
  gen->add_option("--input", gen_opt.input, "partial coloring file (reduce)");
  gen->add_option("-o,--output", gen_opt.output, "output instance file")
      ->required();

  // bound --------------------------------------------------------------
  std::string bound_method = "dm";
  std::string bound_file;
  CLI::App* bound = app.add_subcommand("bound", "lower bounds as a CSV row");
  bound->add_option("--method", bound_method,
                    "dm | degree | matching | flow | all");
  bound->add_option("instance", bound_file, "instance file")->required();

  // solve --------------------------------------------------------------
  std::string solve_alg;
  std::string solve_file, solve_out, solve_stats;
  CLI::App* solve = app.add_subcommand("solve", "run a coloring algorithm");
  solve->add_option("--alg", solve_alg, "algorithm name")->required();
  solve->add_option("instance", solve_file, "instance file")->required();
  solve->add_option("-o,--output", solve_out, "coloring output file");
  solve->add_option("--stats", solve_stats, "stats CSV output file");

  // exact --------------------------------------------------------------
  std::string exact_file, exact_out;
  long long exact_nodes = -1, exact_time = -1;
  bool allow_timeout = false;
  CLI::App* exact_cmd = app.add_subcommand("exact", "exact optimum search");
  exact_cmd->add_option("instance", exact_file, "instance file")->required();
  exact_cmd->add_option("--node-limit", exact_nodes, "search node budget");
  exact_cmd->add_option("--time-limit-ms", exact_time, "time budget in ms");
  exact_cmd->add_flag("--allow-timeout", allow_timeout,
                      "exit 0 even on timeout");
  exact_cmd->add_option("-o,--output", exact_out, "witness coloring file");

  // verify -------------------------------------------------------------
  std::string verify_inst, verify_col;
  bool verify_partial = false;
  CLI::App* verify = app.add_subcommand("verify", "validate a coloring");
  verify->add_option("instance", verify_inst, "instance file")->required();
  verify->add_option("coloring", verify_col, "coloring file")->required();
  verify->add_flag("--partial", verify_partial, "check assigned edges only");

  // bench --------------------------------------------------------------
  std::string bench_study = "random";
  std::string bench_algs = "greedy,augpath,match-size,match-degree,match-priority";
  std::string bench_bounds = "degree,matching,flow";
  std::string bench_sizes = "4,8,16,32,64";
  std::string bench_out, bench_dat;
  bool bench_small = false;
  ExperimentConfig cfg;
  CLI::App* bench = app.add_subcommand("bench", "experiment harness");
  bench->add_option("--study", bench_study, "random | bn");
  bench->add_option("--n", cfg.n, "vertices per side (random)");
  bool bench_total = false;
  bench->add_flag("--total", bench_total,
                  "interpret --n as a total split across both sides");
  bench->add_option("--delta-min", cfg.delta_min, "smallest degree");
  bench->add_option("--delta-max", cfg.delta_max, "largest degree");
  bench->add_option("--delta-step", cfg.delta_step, "degree step");
  bench->add_option("--bmax-offset", cfg.bmax_offset, "bmax = delta + offset");
  int bench_bmax_fixed = 0;
  bench->add_option("--bmax", bench_bmax_fixed, "fixed bmax (overrides offset)");
  bench->add_option("--trials", cfg.trials, "instances per data point");
  bench->add_option("--seed", cfg.seed, "experiment seed");
  bench->add_option("--algs", bench_algs, "comma list of algorithms");
  bench->add_option("--bounds", bench_bounds, "comma list of bounds");
  bench->add_option("--bn-sizes", bench_sizes, "comma list of Bn sizes");
  bench->add_flag("--small", bench_small, "reduced profile (n=40, delta<=20)");
  bench->add_option("-o,--output", bench_out, "CSV output file")->required();
  bench->add_option("--dat", bench_dat, "gnuplot data output file");

  std::vector<const char*> argv;
  argv.push_back("bec");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return cmd_gen(gen_opt);

    if (*bound) {
      BecInstance g = read_instance(bound_file);
      bool with_flow = bound_method == "flow" || bound_method == "all";
      BoundReport report = best_lower_bound(g, with_flow);
      std::cout << "instance,D,M,P,best\n"
                << report.csv_row(bound_file) << "\n";
      return 0;
    }

    if (*solve) {
      BecInstance g = read_instance(solve_file);
      AlgorithmResult res = run_algorithm(solve_alg, g);
      Verdict verdict = validate_coloring(g, res.coloring);
      std::string out_path =
          solve_out.empty() ? solve_file + ".becc" : solve_out;
      write_coloring(res.coloring, out_path);
      if (!solve_stats.empty()) {
        std::ofstream st(solve_stats);
        st << "instance,alg,max_color,augmentations,ms\n"
           << solve_file << "," << solve_alg << "," << res.max_color << ","
           << res.stats.augmentations << "," << res.stats.elapsed_ms << "\n";
      }
      std::cout << "max_color " << res.max_color << " coloring " << out_path
                << "\n";
      if (!verdict.valid) {
        print_verdict(verdict, std::cerr);
        return 2;
      }
      return 0;
    }

    if (*exact_cmd) {
      BecInstance g = read_instance(exact_file);
      ExactResult res = exact(g, {exact_nodes, exact_time});
      std::cout << "C* " << res.optimum << " "
                << (res.status == ExactStatus::Proved ? "PROVED" : "TIMEOUT")
                << " nodes " << res.nodes << "\n";
      if (!exact_out.empty()) write_coloring(res.coloring, exact_out);
      if (res.status == ExactStatus::Timeout && !allow_timeout) return 3;
      return 0;
    }

    if (*verify) {
      BecInstance g = read_instance(verify_inst);
      Coloring c = read_coloring(verify_col);
      Verdict verdict = validate_coloring(
          g, c, verify_partial ? ValidateMode::Partial : ValidateMode::Strict);
      print_verdict(verdict, std::cout);
      return verdict.valid ? 0 : 2;
    }

    if (*bench) {
      cfg.study = bench_study == "bn" ? Study::Bn : Study::Random;
      if (bench_study != "bn" && bench_study != "random")
        throw std::invalid_argument("bench: unknown study " + bench_study);
      if (bench_total) cfg.n = std::max(1, cfg.n / 2);
      if (bench_small) {
        cfg.n = 40;
        cfg.delta_min = 5;
        cfg.delta_max = 20;
        cfg.delta_step = 5;
      }
      if (bench_bmax_fixed > 0) cfg.bmax_fixed = bench_bmax_fixed;
      cfg.algorithms = split_list(bench_algs);
      cfg.bounds = split_list(bench_bounds);
      cfg.bn_sizes.clear();
      for (const std::string& tok : split_list(bench_sizes))
        cfg.bn_sizes.push_back(std::stoi(tok));
      if (const char* env = std::getenv("BEC_SEED"))
        cfg.seed = std::strtoull(env, nullptr, 10);

      std::vector<ResultRow> rows = run_experiment(cfg);
      std::ofstream out(bench_out);
      if (!out) throw std::runtime_error("cannot write " + bench_out);
      write_csv(rows, out);
      if (!bench_dat.empty()) {
        std::ofstream dat(bench_dat);
        if (!dat) throw std::runtime_error("cannot write " + bench_dat);
        write_dat(rows, dat);
      }
      std::cout << rows.size() << " rows -> " << bench_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace bec

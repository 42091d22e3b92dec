#include "subsum/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "subsum/bench.hpp"
#include "subsum/errors.hpp"
#include "subsum/generator.hpp"
#include "subsum/instance.hpp"
#include "subsum/mitm.hpp"
#include "subsum/oracle.hpp"
#include "subsum/parallel.hpp"
#include "subsum/partition.hpp"
#include "subsum/verify.hpp"

namespace subsum {
namespace {

constexpr std::size_t kMaxPrintedCollisions = 10;

std::size_t parse_limit(const std::string& text) {
  if (text == "all") return kAll;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("--limit expects a count or 'all', got '" + text + "'");
  }
  return v;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Found: return 0;
    case Status::None:
    case Status::InfeasibleByRange: return 1;
    case Status::CapacityExceeded: return 2;
  }
  return 2;
}

void print_stats(const SolverReport& r, const ProblemInstance& inst, bool zero_based,
                 std::ostream& out) {
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
  out << "# algorithm: " << to_string(r.algorithm) << '\n'
      << "# status: " << to_string(r.status) << '\n'
      << "# solutions: " << r.solutions.size() << '\n'
      << "# entries_built: " << r.entries_built << '\n'
      << "# probes: " << r.probes << '\n'
      << "# exclusions_tried: " << r.exclusions_tried << '\n'
      << "# tasks_run: " << r.tasks_run << '\n'
      << "# complemented: " << (r.complemented ? "yes" : "no") << '\n'
      << "# wall_ms: " << wall << '\n';
  if (!r.block_terms.empty()) {
    out << "# block_terms:";
    for (const Count c : r.block_terms) out << ' ' << c;
    out << '\n';
  }
  // Collision ranks are table positions; only meaningful without the
  // complement since they refer to the transformed problem otherwise.
  const Index base = zero_based ? 0 : 1;
  for (std::size_t i = 0; i < r.collisions.size() && i < kMaxPrintedCollisions; ++i) {
    const CollisionPair& c = r.collisions[i];
    const Wide s = r.complemented ? c.z_a + c.z_b : inst.target();
    out << "# collision: i=" << c.rank_a + base << " j=" << c.rank_b + base
        << " z_i=" << to_string(c.z_a) << " z_j=" << to_string(c.z_b)
        << " tau=" << to_string(tau(s, c.z_a)) << '\n';
  }
}

}  // namespace

int run_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  SolverReport report;
  try {
    const ProblemInstance inst = load_instance(cmd.instance_path);
    SolverOptions options;
    options.threads = cmd.threads == 0 ? default_threads() : cmd.threads;
    options.use_complement = !cmd.no_complement;
    if (cmd.memory_cap_entries) options.memory_cap_entries = *cmd.memory_cap_entries;
    const std::size_t limit = parse_limit(cmd.limit);
    if (inst.cardinality() > inst.size()) {
      throw InfeasibleCardinality("m = " + std::to_string(inst.cardinality()) +
                                  " exceeds n = " + std::to_string(inst.size()));
    }

    try {
      if (cmd.algorithm == "enumerate") {
        report = enumerate_report(inst, limit, options);
      } else if (cmd.algorithm == "mitm") {
        report = solve(inst, limit, options);
      } else if (cmd.algorithm == "partition") {
        const PartitionPlan plan = make_partition(inst, cmd.partition_blocks,
                                                  parse_partition_strategy(cmd.partition_strategy));
        if (cmd.partition_mode == "pair") {
          const Index m = inst.cardinality();
          const Index k1 = cmd.k1.value_or(cmd.k2 ? m - *cmd.k2 : m - m / 2);
          const Index k2 = cmd.k2.value_or(m - k1);
          report = solve_pair_mode(inst, plan, k1, k2, limit, options);
        } else if (cmd.partition_mode == "composition") {
          report = solve_composition_mode(inst, plan, limit, options);
        } else {
          throw std::invalid_argument("unknown partition mode '" + cmd.partition_mode + "'");
        }
      } else {
        throw std::invalid_argument("unknown algorithm '" + cmd.algorithm + "'");
      }
    } catch (const CapacityError& e) {
      report.status = Status::CapacityExceeded;
      report.error = e.what();
    }

    for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
    if (report.status == Status::CapacityExceeded) err << "error: " << report.error << '\n';
    out << render_solutions(report.solutions, inst.target(), cmd.zero_based);
    print_stats(report, inst, cmd.zero_based, out);
    return exit_code(report.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fixed-cardinality subset-sum solver"};
  app.require_subcommand(1);

  SolveCommand solve_cmd;
  auto* solve_app = app.add_subcommand("solve", "Solve an instance file");
  solve_app->add_option("instance", solve_cmd.instance_path, "Instance file")->required();
  solve_app->add_option("--algorithm", solve_cmd.algorithm, "enumerate | mitm | partition")
      ->check(CLI::IsMember({"enumerate", "mitm", "partition"}));
  solve_app->add_option("--partition-mode", solve_cmd.partition_mode, "pair | composition")
      ->check(CLI::IsMember({"pair", "composition"}));
  solve_app->add_option("--partition-blocks", solve_cmd.partition_blocks, "Number of blocks");
  solve_app->add_option("--partition-strategy", solve_cmd.partition_strategy,
                        "contiguous | round-robin")
      ->check(CLI::IsMember({"contiguous", "round-robin"}));
  solve_app->add_option("--k1", solve_cmd.k1, "Pair mode: elements from the first block");
  solve_app->add_option("--k2", solve_cmd.k2, "Pair mode: elements from the second block");
  solve_app->add_option("--limit", solve_cmd.limit, "Maximum solutions (N or all)");
  solve_app->add_flag("--no-complement", solve_cmd.no_complement,
                      "Never solve the complement problem");
  solve_app->add_option("--threads", solve_cmd.threads, "Worker threads (0 = all cores)");
  solve_app->add_flag("--zero-based", solve_cmd.zero_based, "Print 0-based indices");
  solve_app->add_option("--memory-cap-entries", solve_cmd.memory_cap_entries,
                        "Largest sum table in entries");

  GeneratorSpec gen;
  std::string gen_output;
  bool unplanted = false;
  auto* gen_app = app.add_subcommand("generate", "Write a seeded random instance");
  gen_app->add_option("--n", gen.n, "Set size")->required();
  gen_app->add_option("--m", gen.m, "Subset cardinality")->required();
  gen_app->add_option("--min", gen.min_value, "Smallest value");
  gen_app->add_option("--max", gen.max_value, "Largest value");
  gen_app->add_option("--seed", gen.seed, "Random seed");
  gen_app->add_flag("--unplanted", unplanted, "Draw S from the feasible range instead of planting");
  gen_app->add_option("-o,--output", gen_output, "Output file (default stdout)");

  VerifyConfig verify_cfg;
  std::vector<std::string> corpus;
  std::size_t verify_threads = 1;
  auto* verify_app = app.add_subcommand("verify", "Cross-check every solver against the oracle");
  verify_app->add_option("--trials", verify_cfg.trials, "Random trials");
  verify_app->add_option("--seed", verify_cfg.seed, "Base seed");
  verify_app->add_option("--n-min", verify_cfg.n_min, "Smallest n");
  verify_app->add_option("--n-max", verify_cfg.n_max, "Largest n (<= 20)");
  verify_app->add_option("--threads", verify_threads, "Worker threads per solver call");
  verify_app->add_option("--corpus", corpus, "Instance files to verify instead of random trials");

  BenchConfig bench_cfg;
  bench_cfg.points = default_bench_grid();
  std::string bench_points;
  std::vector<std::string> bench_algorithms;
  std::string bench_output;
  bool bench_complement = false;
  std::size_t bench_threads = 1;
  auto* bench_app = app.add_subcommand("bench", "Operation counts and timings as CSV");
  bench_app->add_option("--points", bench_points, "n:m,n:m,... (default: n=10..20 x m=4..8)");
  bench_app->add_option("--reps", bench_cfg.repetitions, "Repetitions per point");
  bench_app->add_option("--algorithms", bench_algorithms,
                        "enumerate, mitm, partition-pair, partition-composition")
      ->delimiter(',');
  bench_app->add_option("--seed", bench_cfg.seed, "Base seed");
  bench_app->add_option("--min", bench_cfg.min_value, "Smallest value");
  bench_app->add_option("--max", bench_cfg.max_value, "Largest value");
  bench_app->add_option("--partition-blocks", bench_cfg.partition_blocks, "Blocks for partition rows");
  bench_app->add_flag("--complement", bench_complement, "Allow the complement transform");
  bench_app->add_option("--threads", bench_threads, "Worker threads per solver call");
  bench_app->add_option("-o,--output", bench_output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_app) return run_solve(solve_cmd, out, err);

    if (*gen_app) {
      gen.planted = !unplanted;
      const std::string text = render_generated(gen, generate_instance(gen));
      if (gen_output.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + gen_output + "'");
        f << text;
      }
      return 0;
    }

    if (*verify_app) {
      verify_cfg.options.threads = verify_threads == 0 ? default_threads() : verify_threads;
      VerifyResult result;
      if (corpus.empty()) {
        result = run_verify(verify_cfg);
      } else {
        std::vector<ProblemInstance> instances;
        for (const auto& path : corpus) instances.push_back(load_instance(path));
        result = run_verify(instances, verify_cfg.options);
      }
      out << "trials: " << result.trials_run << '\n'
          << "odd-m trials: " << result.odd_trials << '\n'
          << "complement trials: " << result.complement_trials << '\n'
          << "discrepancies: " << result.discrepancies << '\n';
      if (result.counterexample) out << "first counterexample:\n" << *result.counterexample;
      out << (result.passed() ? "PASS" : "FAIL") << '\n';
      return result.passed() ? 0 : 1;
    }

    if (*bench_app) {
      if (!bench_points.empty()) bench_cfg.points = parse_bench_points(bench_points);
      if (!bench_algorithms.empty()) {
        bench_cfg.algorithms.clear();
        for (const auto& a : bench_algorithms) bench_cfg.algorithms.push_back(parse_algorithm(a));
      }
      bench_cfg.options.use_complement = bench_complement;
      bench_cfg.options.threads = bench_threads == 0 ? default_threads() : bench_threads;
      if (bench_output.empty()) {
        run_benchmark(bench_cfg, out);
      } else {
        std::ostringstream buf;
        run_benchmark(bench_cfg, buf);
        std::ofstream f(bench_output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + bench_output + "'");
        f << buf.str();
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace subsum

#include "subsum/bench.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "subsum/combinatorics.hpp"
#include "subsum/errors.hpp"
#include "subsum/generator.hpp"
#include "subsum/mitm.hpp"
#include "subsum/oracle.hpp"
#include "subsum/partition.hpp"

namespace subsum {

std::vector<BenchPoint> default_bench_grid() {
  std::vector<BenchPoint> grid;
  for (Index n = 10; n <= 20; n += 2) {
    for (Index m = 4; m <= 8; ++m) grid.push_back({n, m});
  }
  return grid;
}

namespace {

Index parse_index(std::string_view text) {
  Index v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad count '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::vector<BenchPoint> parse_bench_points(std::string_view text) {
  std::vector<BenchPoint> points;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("bench point '" + std::string(item) + "' is not n:m");
    }
    points.push_back({parse_index(item.substr(0, colon)), parse_index(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return points;
}

Algorithm parse_algorithm(std::string_view text) {
  for (const Algorithm a : {Algorithm::Enumerate, Algorithm::Mitm, Algorithm::PartitionPair,
                            Algorithm::PartitionComposition}) {
    if (text == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

Index bench_k(Algorithm algorithm, Index effective_m) {
  return algorithm == Algorithm::Enumerate ? effective_m : effective_m / 2;
}

void run_benchmark(const BenchConfig& config, std::ostream& csv) {
  for (const BenchPoint& p : config.points) {
    if (p.m > p.n) {
      throw std::invalid_argument("bench point " + std::to_string(p.n) + ":" + std::to_string(p.m) +
                                  " has m > n");
    }
    for (const Algorithm a : config.algorithms) {
      if (a == Algorithm::Enumerate && binomial(p.n, p.m) > config.options.enumeration_cap) {
        throw CapacityError("bench point " + std::to_string(p.n) + ":" + std::to_string(p.m) +
                            " exceeds the enumeration cap");
      }
      if (a == Algorithm::Mitm && binomial(p.n, p.m / 2) > config.options.memory_cap_entries) {
        throw CapacityError("bench point " + std::to_string(p.n) + ":" + std::to_string(p.m) +
                            " exceeds the memory cap");
      }
    }
  }

  csv << kBenchHeader << '\n';
  std::uint64_t stream = 0;
  for (const BenchPoint& p : config.points) {
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      GeneratorSpec spec;
      spec.n = p.n;
      spec.m = p.m;
      spec.min_value = config.min_value;
      spec.max_value = config.max_value;
      spec.planted = true;
      spec.seed = mix_seed(config.seed, stream++);
      const ProblemInstance inst = generate_instance(spec);
      for (const Algorithm a : config.algorithms) {
        SolverReport r;
        switch (a) {
          case Algorithm::Enumerate:
            r = enumerate_report(inst, kAll, config.options);
            break;
          case Algorithm::Mitm:
            r = solve(inst, kAll, config.options);
            break;
          case Algorithm::PartitionPair: {
            const auto blocks = std::max<std::size_t>(2, std::min<std::size_t>(config.partition_blocks, p.n));
            const PartitionPlan plan = make_partition(inst, blocks, PartitionStrategy::Contiguous);
            r = solve_pair_mode(inst, plan, p.m - p.m / 2, p.m / 2, kAll, config.options);
            break;
          }
          case Algorithm::PartitionComposition: {
            const auto blocks = std::min<std::size_t>(std::max<std::size_t>(1, config.partition_blocks), p.n);
            const PartitionPlan plan = make_partition(inst, blocks, PartitionStrategy::Contiguous);
            r = solve_composition_mode(inst, plan, kAll, config.options);
            break;
          }
        }
        const Index m_eff = a == Algorithm::Mitm ? r.effective_cardinality : p.m;
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
        csv << to_string(a) << ',' << p.n << ',' << p.m << ',' << bench_k(a, m_eff) << ','
            << r.entries_built << ',' << r.probes << ',' << wall << ',' << r.solutions.size()
            << '\n';
      }
    }
  }
}

}  // namespace subsum

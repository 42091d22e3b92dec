#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "subsum/report.hpp"

namespace subsum {

struct BenchPoint {
  Index n = 0;
  Index m = 0;
};

struct BenchConfig {
  std::vector<BenchPoint> points;
  std::size_t repetitions = 1;
  std::vector<Algorithm> algorithms = {Algorithm::Enumerate, Algorithm::Mitm};
  std::uint64_t seed = 1;
  Value min_value = 1;
  Value max_value = 100;
  std::size_t partition_blocks = 2;
  /// Off by default so mitm rows count the table for the requested m.
  SolverOptions options = [] {
    SolverOptions o;
    o.use_complement = false;
    return o;
  }();
};

inline constexpr std::string_view kBenchHeader =
    "algorithm,n,m,k,entries_built,probes,wall_ms,solutions";

/// n in {10, 12, ..., 20} crossed with m in {4, ..., 8}.
std::vector<BenchPoint> default_bench_grid();

/// Parses "n:m,n:m,..."; throws std::invalid_argument.
std::vector<BenchPoint> parse_bench_points(std::string_view text);

/// Parses "enumerate", "mitm", "partition-pair", "partition-composition".
Algorithm parse_algorithm(std::string_view text);

/// Half-size reported in the `k` column for a row.
Index bench_k(Algorithm algorithm, Index effective_m);

/// Runs one planted instance per (point, repetition) through every
/// configured algorithm and writes one CSV row per run, in config order,
/// after the header. Every point is checked against the enumeration and
/// memory caps before any row is written (CapacityError).
void run_benchmark(const BenchConfig& config, std::ostream& csv);

}  // namespace subsum

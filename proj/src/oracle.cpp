#include "subsum/oracle.hpp"

#include <chrono>

#include "subsum/combinatorics.hpp"
#include "subsum/errors.hpp"
#include "subsum/parallel.hpp"

namespace subsum {
namespace {

struct ChunkResult {
  std::vector<Solution> solutions;
  Count examined = 0;
};

ChunkResult scan(std::span<const Value> values, Wide target, Index m, RankRange range,
                 std::size_t limit) {
  ChunkResult out;
  const auto n = static_cast<Index>(values.size());
  std::vector<Index> idx(m);
  unrank_into(n, range.begin, idx);
  for (Count r = range.begin; r < range.end; ++r) {
    Wide sum = 0;
    for (const Index i : idx) sum += values[i];
    ++out.examined;
    if (sum == target) {
      out.solutions.push_back(Solution{idx});
      if (out.solutions.size() >= limit) break;
    }
    advance_indices(idx, n);
  }
  return out;
}

}  // namespace

SolverReport enumerate_report(const ProblemInstance& inst, std::size_t limit,
                              const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolverReport report;
  report.algorithm = Algorithm::Enumerate;
  report.effective_cardinality = inst.cardinality();

  const Index n = inst.size();
  const Index m = inst.cardinality();
  const FeasibleRange range = feasible_range(inst);
  if (options.range_pruning && !range.contains(inst.target())) {
    report.status = Status::InfeasibleByRange;
    return report;
  }
  const Count total = binomial(n, m);
  if (total > options.enumeration_cap) {
    throw CapacityError("C(" + std::to_string(n) + ", " + std::to_string(m) +
                        ") exceeds the enumeration cap");
  }
  if (limit == 0) {
    report.finish();
    return report;
  }

  // A bounded search runs in rank order on one thread so that the "first
  // `limit`" solutions and the counters are independent of the thread count.
  const std::size_t threads = limit == kAll ? options.threads : 1;
  const std::vector<RankRange> chunks = split_ranks(total, threads == 1 ? 1 : threads * 4);
  std::vector<ChunkResult> results(chunks.size());
  parallel_for(chunks.size(), threads, [&](std::size_t c) {
    results[c] = scan(inst.values(), inst.target(), m, chunks[c], limit);
  });
  for (auto& r : results) {
    report.probes += r.examined;
    for (auto& s : r.solutions) {
      if (report.solutions.size() >= limit) break;
      report.solutions.push_back(std::move(s));
    }
  }
  report.tasks_run = chunks.size();
  report.finish();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Solution> enumerate_solutions(const ProblemInstance& inst, std::size_t limit,
                                          const SolverOptions& options) {
  return enumerate_report(inst, limit, options).solutions;
}

Count count_solutions(const ProblemInstance& inst, const SolverOptions& options) {
  return enumerate_report(inst, kAll, options).solutions.size();
}

}  // namespace subsum

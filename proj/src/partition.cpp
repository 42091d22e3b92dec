#include "subsum/partition.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "subsum/combinatorics.hpp"
#include "subsum/errors.hpp"
#include "subsum/mitm.hpp"
#include "subsum/parallel.hpp"

namespace subsum {

std::string_view to_string(PartitionStrategy s) {
  return s == PartitionStrategy::Contiguous ? "contiguous" : "round-robin";
}

PartitionStrategy parse_partition_strategy(std::string_view text) {
  if (text == "contiguous") return PartitionStrategy::Contiguous;
  if (text == "round-robin") return PartitionStrategy::RoundRobin;
  throw std::invalid_argument("unknown partition strategy '" + std::string(text) + "'");
}

PartitionPlan make_partition(Index n, std::size_t n_blocks, PartitionStrategy strategy) {
  if (n_blocks < 1 || n_blocks > n) {
    throw std::invalid_argument("partition needs 1 <= blocks <= n (blocks=" +
                                std::to_string(n_blocks) + ", n=" + std::to_string(n) + ")");
  }
  PartitionPlan plan;
  plan.strategy = strategy;
  plan.blocks.resize(n_blocks);
  if (strategy == PartitionStrategy::Contiguous) {
    for (std::size_t b = 0; b < n_blocks; ++b) {
      const auto lo = static_cast<Index>(static_cast<Count>(b) * n / n_blocks);
      const auto hi = static_cast<Index>(static_cast<Count>(b + 1) * n / n_blocks);
      for (Index j = lo; j < hi; ++j) plan.blocks[b].push_back(j);
    }
  } else {
    for (Index j = 0; j < n; ++j) plan.blocks[j % n_blocks].push_back(j);
  }
  return plan;
}

PartitionPlan make_partition(const ProblemInstance& inst, std::size_t n_blocks,
                             PartitionStrategy strategy) {
  return make_partition(inst.size(), n_blocks, strategy);
}

std::vector<Composition> enumerate_compositions(Index m, const PartitionPlan& plan) {
  const std::size_t b = plan.blocks.size();
  std::vector<Composition> out;
  if (b == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  // capacity_after[i] = total size of blocks i..b-1.
  std::vector<Count> capacity_after(b + 1, 0);
  for (std::size_t i = b; i > 0; --i) capacity_after[i - 1] = capacity_after[i] + plan.blocks[i - 1].size();

  std::vector<Index> counts(b, 0);
  auto recurse = [&](auto&& self, std::size_t i, Index remaining) -> void {
    if (i + 1 == b) {
      if (remaining <= plan.blocks[i].size()) {
        counts[i] = remaining;
        out.push_back({counts});
      }
      return;
    }
    const auto cap = static_cast<Index>(std::min<Count>(plan.blocks[i].size(), remaining));
    for (Index c = 0; c <= cap; ++c) {
      if (remaining - c > capacity_after[i + 1]) continue;
      counts[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  recurse(recurse, 0, m);
  return out;
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Per-task output: solutions in discovery order plus counters.
struct TaskResult {
  std::vector<Solution> solutions;
  Count entries_built = 0;
  Count probes = 0;
  std::vector<Count> table_sizes;
  std::vector<Count> block_terms;
};

struct Collector {
  std::size_t limit = kAll;
  std::set<Solution> seen;

  bool full() const { return seen.size() >= limit; }
  void add(Solution s) {
    if (!full()) seen.insert(std::move(s));
  }
};

// Streams every c-combination of `block` with its sum; emit returns false to
// stop. Returns the number of combinations visited.
template <typename Emit>
Count for_each_block_combination(std::span<const Value> values, std::span<const Index> block,
                                 Index c, Emit&& emit) {
  const auto size = static_cast<Index>(block.size());
  if (c > size) return 0;
  std::vector<Index> pos(c);
  std::iota(pos.begin(), pos.end(), Index{0});
  std::vector<Index> idx(c);
  Count visited = 0;
  do {
    Wide sum = 0;
    for (Index i = 0; i < c; ++i) {
      idx[i] = block[pos[i]];
      sum += values[idx[i]];
    }
    ++visited;
    if (!emit(sum, std::span<const Index>(idx))) break;
  } while (advance_indices(pos, size));
  return visited;
}

// One block-pair role: table over `left` with kl, probe with kr-subsets of
// `right`.
void run_pair_task(const ProblemInstance& inst, std::span<const Index> left, Index kl,
                   std::span<const Index> right, Index kr, std::size_t limit,
                   const SolverOptions& options, TaskResult& out) {
  out.block_terms.push_back(binomial(left.size(), kl));
  out.block_terms.push_back(binomial(right.size(), kr));
  if (kl > left.size() || kr > right.size()) return;
  if (binomial(right.size(), kr) > options.enumeration_cap) {
    throw CapacityError("block probe side exceeds the enumeration cap");
  }
  SolverOptions table_options = options;
  table_options.threads = 1;
  const SumTable table = build_sum_table(inst.values(), left, kl, table_options);
  out.entries_built += table.size();
  out.table_sizes.push_back(table.size());
  std::vector<Index> decoded(kl);
  std::set<Solution> local;
  out.probes += for_each_block_combination(
      inst.values(), right, kr, [&](Wide sum, std::span<const Index> idx) {
        for (const SumEntry& e : table.equal_range(inst.target() - sum)) {
          table.decode_into(e.rank, decoded);
          Solution s;
          s.indices.reserve(kl + kr);
          std::merge(decoded.begin(), decoded.end(), idx.begin(), idx.end(),
                     std::back_inserter(s.indices));
          if (local.insert(s).second) out.solutions.push_back(std::move(s));
          if (local.size() >= limit) return false;
        }
        return true;
      });
}

// Partial-sum table of union subsets across already merged blocks.
struct PartialTable {
  std::size_t width = 0;
  std::vector<Wide> sums;
  std::vector<Index> flat;

  std::size_t size() const { return sums.size(); }
  std::span<const Index> row(std::size_t r) const { return {flat.data() + r * width, width}; }
};

void run_composition_task(const ProblemInstance& inst, const PartitionPlan& plan,
                          const Composition& comp, std::size_t limit, const SolverOptions& options,
                          TaskResult& out) {
  const auto values = inst.values();
  const Wide target = inst.target();
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < comp.counts.size(); ++i) {
    if (comp.counts[i] > 0) used.push_back(i);
    out.block_terms.push_back(binomial(plan.blocks[i].size(), comp.counts[i]));
  }

  if (used.empty()) {
    if (target == 0) out.solutions.push_back(Solution{});
    return;
  }
  if (used.size() == 1) {
    const auto& block = plan.blocks[used[0]];
    const Index c = comp.counts[used[0]];
    if (binomial(block.size(), c) > options.enumeration_cap) {
      throw CapacityError("single-block enumeration exceeds the enumeration cap");
    }
    out.probes += for_each_block_combination(values, block, c, [&](Wide sum, auto idx) {
      if (sum == target) out.solutions.push_back(Solution{{idx.begin(), idx.end()}});
      return out.solutions.size() < limit;
    });
    return;
  }

  // Left-to-right merge of all but the last used block.
  PartialTable partial;
  partial.sums.push_back(0);
  for (std::size_t u = 0; u + 1 < used.size(); ++u) {
    const auto& block = plan.blocks[used[u]];
    const Index c = comp.counts[used[u]];
    const Count next_size = static_cast<Count>(partial.size()) * binomial(block.size(), c);
    if (next_size > options.memory_cap_entries) {
      throw CapacityError("partial table of " + std::to_string(next_size) +
                          " entries exceeds the memory cap");
    }
    PartialTable next;
    next.width = partial.width + c;
    next.sums.reserve(next_size);
    next.flat.reserve(next_size * next.width);
    for (std::size_t r = 0; r < partial.size(); ++r) {
      const auto prefix = partial.row(r);
      for_each_block_combination(values, block, c, [&](Wide sum, auto idx) {
        next.sums.push_back(partial.sums[r] + sum);
        next.flat.insert(next.flat.end(), prefix.begin(), prefix.end());
        next.flat.insert(next.flat.end(), idx.begin(), idx.end());
        return true;
      });
    }
    partial = std::move(next);
    out.entries_built += partial.size();
    out.table_sizes.push_back(partial.size());
  }

  std::vector<std::uint32_t> order(partial.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return partial.sums[a] < partial.sums[b] || (partial.sums[a] == partial.sums[b] && a < b);
  });

  const auto& last = plan.blocks[used.back()];
  const Index c_last = comp.counts[used.back()];
  if (binomial(last.size(), c_last) > options.enumeration_cap) {
    throw CapacityError("block probe side exceeds the enumeration cap");
  }
  out.probes += for_each_block_combination(values, last, c_last, [&](Wide sum, auto idx) {
    const Wide want = target - sum;
    auto lo = std::lower_bound(order.begin(), order.end(), want,
                               [&](std::uint32_t r, Wide w) { return partial.sums[r] < w; });
    for (; lo != order.end() && partial.sums[*lo] == want; ++lo) {
      const auto prefix = partial.row(*lo);
      Solution s;
      s.indices.reserve(prefix.size() + idx.size());
      s.indices.assign(prefix.begin(), prefix.end());
      s.indices.insert(s.indices.end(), idx.begin(), idx.end());
      std::sort(s.indices.begin(), s.indices.end());
      out.solutions.push_back(std::move(s));
      if (out.solutions.size() >= limit) return false;
    }
    return true;
  });
}

// Runs tasks, merging results in task order. Bounded searches run
// sequentially and stop once `limit` distinct solutions are known.
template <typename RunTask>
void run_tasks(std::size_t count, std::size_t limit, const SolverOptions& options,
               SolverReport& report, RunTask&& run) {
  Collector collector;
  collector.limit = limit;
  auto absorb = [&](TaskResult& r) {
    report.entries_built += r.entries_built;
    report.probes += r.probes;
    report.table_sizes.insert(report.table_sizes.end(), r.table_sizes.begin(), r.table_sizes.end());
    report.block_terms.insert(report.block_terms.end(), r.block_terms.begin(), r.block_terms.end());
    for (auto& s : r.solutions) collector.add(std::move(s));
    ++report.tasks_run;
  };
  if (limit != kAll) {
    for (std::size_t t = 0; t < count && !collector.full(); ++t) {
      TaskResult r;
      run(t, limit - collector.seen.size(), r);
      absorb(r);
    }
  } else {
    std::vector<TaskResult> results(count);
    parallel_for(count, std::max<std::size_t>(1, options.threads),
                 [&](std::size_t t) { run(t, kAll, results[t]); });
    for (auto& r : results) absorb(r);
  }
  report.solutions.assign(collector.seen.begin(), collector.seen.end());
  report.finish();
}

}  // namespace

SolverReport solve_pair_mode(const ProblemInstance& inst, const PartitionPlan& plan, Index k1,
                             Index k2, std::size_t limit, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (static_cast<Count>(k1) + k2 != inst.cardinality()) {
    throw std::invalid_argument("pair mode requires k1 + k2 = m");
  }
  if (plan.block_count() < 2) throw std::invalid_argument("pair mode requires at least two blocks");

  SolverReport report;
  report.algorithm = Algorithm::PartitionPair;
  report.effective_cardinality = inst.cardinality();
  const FeasibleRange range = feasible_range(inst);
  if (options.range_pruning && !range.contains(inst.target())) {
    report.status = Status::InfeasibleByRange;
    return report;
  }

  std::size_t smallest = plan.blocks.front().size();
  for (const auto& b : plan.blocks) smallest = std::min(smallest, b.size());
  const Index kmax = std::max(k1, k2);
  if (smallest < 2 * static_cast<std::size_t>(kmax)) {
    report.warnings.push_back("smallest block has " + std::to_string(smallest) +
                              " elements, fewer than 2*max(k1,k2) = " + std::to_string(2 * kmax));
  }

  struct Role {
    std::size_t left;
    Index kl;
    std::size_t right;
    Index kr;
  };
  std::vector<Role> roles;
  for (std::size_t i = 0; i < plan.block_count(); ++i) {
    for (std::size_t j = i + 1; j < plan.block_count(); ++j) {
      roles.push_back({i, k1, j, k2});
      if (k1 != k2) roles.push_back({i, k2, j, k1});
    }
  }
  if (limit > 0) {
    run_tasks(roles.size(), limit, options, report, [&](std::size_t t, std::size_t lim, TaskResult& r) {
      const Role& role = roles[t];
      run_pair_task(inst, plan.blocks[role.left], role.kl, plan.blocks[role.right], role.kr, lim,
                    options, r);
    });
  } else {
    report.finish();
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

SolverReport solve_composition_mode(const ProblemInstance& inst, const PartitionPlan& plan,
                                    std::size_t limit, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolverReport report;
  report.algorithm = Algorithm::PartitionComposition;
  report.effective_cardinality = inst.cardinality();
  const FeasibleRange range = feasible_range(inst);
  if (options.range_pruning && !range.contains(inst.target())) {
    report.status = Status::InfeasibleByRange;
    return report;
  }
  const std::vector<Composition> comps = enumerate_compositions(inst.cardinality(), plan);
  if (limit > 0) {
    run_tasks(comps.size(), limit, options, report, [&](std::size_t t, std::size_t lim, TaskResult& r) {
      run_composition_task(inst, plan, comps[t], lim, options, r);
    });
  } else {
    report.finish();
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace subsum

#pragma once

#include <string_view>
#include <vector>

#include "subsum/instance.hpp"
#include "subsum/report.hpp"

namespace subsum {

enum class PartitionStrategy { Contiguous, RoundRobin };

std::string_view to_string(PartitionStrategy s);
/// Accepts "contiguous" and "round-robin"; throws std::invalid_argument.
PartitionStrategy parse_partition_strategy(std::string_view text);

/// Disjoint nonempty blocks of indices covering {0..n-1}; each block is
/// strictly increasing.
struct PartitionPlan {
  std::vector<std::vector<Index>> blocks;
  PartitionStrategy strategy = PartitionStrategy::Contiguous;

  std::size_t block_count() const noexcept { return blocks.size(); }
};

/// contiguous: block i = [floor(i*n/b), floor((i+1)*n/b)).
/// round-robin: index j goes to block j mod b.
/// Throws std::invalid_argument unless 1 <= n_blocks <= n.
PartitionPlan make_partition(Index n, std::size_t n_blocks, PartitionStrategy strategy);
PartitionPlan make_partition(const ProblemInstance& inst, std::size_t n_blocks,
                             PartitionStrategy strategy);

/// Per-block element counts of a candidate solution.
struct Composition {
  std::vector<Index> counts;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All count vectors with sum m and counts[i] <= |blocks[i]|, in
/// lexicographic order.
std::vector<Composition> enumerate_compositions(Index m, const PartitionPlan& plan);

/// Block-pair search. For every block pair i < j, unions of a k1-subset of
/// block i with a k2-subset of block j (and, when k1 != k2, a k2-subset of
/// block i with a k1-subset of block j). Finds exactly the solutions split
/// k1/k2 across two blocks with nothing elsewhere; not complete in general.
///
/// Requires k1 + k2 == m and at least two blocks (std::invalid_argument).
/// Adds a warning to the report when some block has fewer than
/// 2*max(k1, k2) elements.
SolverReport solve_pair_mode(const ProblemInstance& inst, const PartitionPlan& plan, Index k1,
                             Index k2, std::size_t limit = kAll,
                             const SolverOptions& options = {});

/// Complete partitioned search: for every composition, merges the per-block
/// c_i-sum tables left to right and probes the last nonzero block against
/// the merged table. Returns exactly the oracle's solution set.
SolverReport solve_composition_mode(const ProblemInstance& inst, const PartitionPlan& plan,
                                    std::size_t limit = kAll, const SolverOptions& options = {});

}  // namespace subsum

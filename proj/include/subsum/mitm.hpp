#pragma once

#include <span>
#include <vector>

#include "subsum/instance.hpp"
#include "subsum/report.hpp"

namespace subsum {

struct SumEntry {
  Wide z = 0;
  /// Lexicographic rank of the k-combination over positions of the universe.
  Count rank = 0;
};

/// All C(|universe|, k) k-sums of a set of usable indices, sorted by
/// (z, rank). The universe is strictly increasing, so decoded index sets
/// come out sorted.
class SumTable {
 public:
  SumTable(std::vector<SumEntry> entries, std::vector<Index> universe, Index k)
      : entries_(std::move(entries)), universe_(std::move(universe)), k_(k) {}

  std::span<const SumEntry> entries() const noexcept { return entries_; }
  std::span<const Index> universe() const noexcept { return universe_; }
  Index k() const noexcept { return k_; }
  Count size() const noexcept { return entries_.size(); }

  /// Entries whose sum equals z (contiguous, rank ascending).
  std::span<const SumEntry> equal_range(Wide z) const;

  /// Original indices of the combination with the given rank.
  std::vector<Index> decode(Count rank) const;
  void decode_into(Count rank, std::span<Index> out) const;

 private:
  std::vector<SumEntry> entries_;
  std::vector<Index> universe_;
  Index k_ = 0;
};

/// Builds the k-sum table over `universe` (strictly increasing indices into
/// values). Construction is split by rank ranges across options.threads
/// workers; the result does not depend on the thread count.
///
/// Throws CapacityError when C(|universe|, k) exceeds
/// options.memory_cap_entries and std::invalid_argument when k > |universe|
/// or the universe is not strictly increasing.
SumTable build_sum_table(std::span<const Value> values, std::span<const Index> universe, Index k,
                         const SolverOptions& options = {});

/// (S - z) * z. Equal tau values for z1, z2 mean z1 == z2 or z1 + z2 == S.
/// Throws CapacityError on overflow.
Wide tau(Wide s, Wide z);

/// Every unordered pair of distinct entries with z_a + z_b == S whose decoded
/// index sets are disjoint, each once with rank_a < rank_b. Pairs come out
/// in table scan order; at most `limit` are returned.
std::vector<CollisionPair> find_pairs(const SumTable& table, Wide s, std::size_t limit = kAll,
                                      std::size_t threads = 1);

/// Even m: k = m/2 table over all indices, solutions are unions of
/// colliding disjoint pairs. Requires m even and m <= n.
SolverReport solve_even(const ProblemInstance& inst, std::size_t limit = kAll,
                        const SolverOptions& options = {});

/// Odd m: for each excluded index in ascending order, solve the even
/// problem of cardinality m-1 on the remaining indices with target
/// S - x_excluded. Requires m odd and 1 <= m <= n.
SolverReport solve_odd(const ProblemInstance& inst, std::size_t limit = kAll,
                       const SolverOptions& options = {});

/// Dispatches on the parity of m, applying the complement transform first
/// when options.use_complement is set and m > n/2.
SolverReport solve(const ProblemInstance& inst, std::size_t limit = kAll,
                   const SolverOptions& options = {});

}  // namespace subsum

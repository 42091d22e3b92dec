#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subsum/types.hpp"

namespace subsum {

/// One m-subset, as strictly increasing 0-based indices.
struct Solution {
  std::vector<Index> indices;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;
};

/// Sorts lexicographically by index tuple and removes duplicates.
void normalize(std::vector<Solution>& solutions);

/// Index set {0..n-1} minus s.
Solution complement_of(const Solution& s, Index n);

/// A k-sum table entry pair whose sums add up to the target.
struct CollisionPair {
  Count rank_a = 0;
  Count rank_b = 0;
  Wide z_a = 0;
  Wide z_b = 0;

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

struct SolverOptions {
  std::size_t threads = 1;
  /// Largest sum table (entries) any solver may allocate.
  Count memory_cap_entries = Count{1} << 27;
  /// Largest number of combinations the exhaustive oracle may visit.
  Count enumeration_cap = Count{1} << 31;
  /// Solve the (n - m)-cardinality complement when m > n / 2.
  bool use_complement = true;
  /// Reject out-of-range targets before searching.
  bool range_pruning = true;
};

enum class Algorithm { Enumerate, Mitm, PartitionPair, PartitionComposition };
enum class Status { Found, None, InfeasibleByRange, CapacityExceeded };

std::string_view to_string(Algorithm a);
std::string_view to_string(Status s);

/// Solutions plus exact operation counters for one solver run.
///
/// entries_built is the total size of every sum table constructed during the
/// run. probes counts complement lookups (table solvers) or combinations
/// examined (exhaustive enumeration).
struct SolverReport {
  Algorithm algorithm = Algorithm::Mitm;
  Status status = Status::None;
  std::vector<Solution> solutions;
  Count entries_built = 0;
  Count probes = 0;
  Count exclusions_tried = 0;
  Count tasks_run = 0;
  double wall_ms = 0.0;

  /// Cardinality actually searched (n - m when the complement was used).
  Index effective_cardinality = 0;
  bool complemented = false;
  /// Pairs that produced solutions in the even-m table solver.
  std::vector<CollisionPair> collisions;
  /// Sizes of the individual tables counted in entries_built.
  std::vector<Count> table_sizes;
  /// Partition solvers: C(|block|, c) for every block side searched, the
  /// terms of the per-block cost bound.
  std::vector<Count> block_terms;
  std::vector<std::string> warnings;
  std::string error;

  /// Sets status from the solution list (found / none).
  void finish();
};

}  // namespace subsum

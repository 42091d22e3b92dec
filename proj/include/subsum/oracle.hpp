#pragma once

#include <vector>

#include "subsum/instance.hpp"
#include "subsum/report.hpp"

namespace subsum {

/// Exhaustive reference solver: visits every m-combination in lexicographic
/// order and keeps those summing to S. Returns all solutions (or the first
/// `limit`) in lexicographic index order.
///
/// Throws InfeasibleCardinality when m > n and CapacityError when C(n, m)
/// exceeds options.enumeration_cap.
std::vector<Solution> enumerate_solutions(const ProblemInstance& inst, std::size_t limit = kAll,
                                          const SolverOptions& options = {});

Count count_solutions(const ProblemInstance& inst, const SolverOptions& options = {});

/// enumerate_solutions with instrumentation; probes = combinations examined.
SolverReport enumerate_report(const ProblemInstance& inst, std::size_t limit = kAll,
                              const SolverOptions& options = {});

}  // namespace subsum

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subsum/instance.hpp"
#include "subsum/report.hpp"

namespace subsum {

/// Largest n the oracle-backed verifier accepts.
inline constexpr Index kVerifyMaxN = 20;

struct VerifyConfig {
  std::size_t trials = 1000;
  Index n_min = 4;
  Index n_max = 14;
  std::uint64_t seed = 1;
  /// Trials cycle through these value ranges.
  std::vector<std::pair<Value, Value>> value_ranges = {{-50, 50}, {1, 100}};
  SolverOptions options;
};

/// Outcome of checking one instance against the oracle.
struct InstanceCheck {
  bool ok = true;
  /// Which solver disagreed and how; empty when ok.
  std::string diff;
  std::vector<std::string> paths;
};

/// Solves inst with every solver (mitm with and without the complement,
/// composition mode over several partitions, pair mode against the
/// filtered oracle) and compares each solution set with the oracle's.
/// Throws std::invalid_argument when n > kVerifyMaxN.
InstanceCheck verify_instance(const ProblemInstance& inst, const SolverOptions& options = {});

struct VerifyResult {
  std::size_t trials_run = 0;
  std::size_t discrepancies = 0;
  std::size_t odd_trials = 0;
  std::size_t complement_trials = 0;
  /// First failing instance (file format) followed by the diff.
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return discrepancies == 0; }
};

/// Generates config.trials seeded instances (n uniform in [n_min, n_max],
/// m uniform in [0, n], alternating planted/unplanted) and verifies each.
VerifyResult run_verify(const VerifyConfig& config);

/// Verifies a fixed list of instances (a corpus).
VerifyResult run_verify(const std::vector<ProblemInstance>& corpus, const SolverOptions& options);

/// Solutions rendered 1-based, one per line, for diffs and listings.
std::string render_solutions(const std::vector<Solution>& solutions, Wide target,
                             bool zero_based = false);

}  // namespace subsum

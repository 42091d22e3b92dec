#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "subsum/report.hpp"

namespace subsum {

struct SolveCommand {
  std::string instance_path;
  std::string algorithm = "mitm";
  std::string partition_mode = "composition";
  std::size_t partition_blocks = 2;
  std::string partition_strategy = "contiguous";
  std::optional<Index> k1;
  std::optional<Index> k2;
  std::string limit = "all";
  bool no_complement = false;
  std::size_t threads = 0;
  bool zero_based = false;
  std::optional<Count> memory_cap_entries;
};

/// Prints solutions (one per line, `i j ... = S`) then a `# key: value`
/// stats block. Exit code: 0 found, 1 none or infeasible, 2 on error.
int run_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);

/// Full command line (subcommands solve, generate, verify, bench).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subsum

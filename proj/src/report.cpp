#include "subsum/report.hpp"

#include <algorithm>

namespace subsum {

void normalize(std::vector<Solution>& solutions) {
  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
}

Solution complement_of(const Solution& s, Index n) {
  Solution out;
  out.indices.reserve(n - s.indices.size());
  std::size_t j = 0;
  for (Index i = 0; i < n; ++i) {
    if (j < s.indices.size() && s.indices[j] == i) {
      ++j;
    } else {
      out.indices.push_back(i);
    }
  }
  return out;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Enumerate: return "enumerate";
    case Algorithm::Mitm: return "mitm";
    case Algorithm::PartitionPair: return "partition-pair";
    case Algorithm::PartitionComposition: return "partition-composition";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Found: return "found";
    case Status::None: return "none";
    case Status::InfeasibleByRange: return "infeasible-by-range";
    case Status::CapacityExceeded: return "capacity-exceeded";
  }
  return "unknown";
}

void SolverReport::finish() { status = solutions.empty() ? Status::None : Status::Found; }

}  // namespace subsum

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "subsum/instance.hpp"

namespace subsum {

struct GeneratorSpec {
  Index n = 0;
  Index m = 0;
  Value min_value = 1;
  Value max_value = 100;
  std::uint64_t seed = 0;
  /// Target is the sum of a random m-subset (guarantees a solution);
  /// otherwise it is drawn uniformly from the feasible range.
  bool planted = true;
};

/// Throws std::invalid_argument unless m <= n, min <= max and both bounds
/// are within the value cap.
void validate(const GeneratorSpec& spec);

/// Deterministic in spec (including the seed).
ProblemInstance generate_instance(const GeneratorSpec& spec);

/// Instance text preceded by a `# seed=...` comment describing the spec.
std::string render_generated(const GeneratorSpec& spec, const ProblemInstance& inst);

/// Stateless 64-bit mixer used to derive independent seeds for trials and
/// benchmark points from one base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

/// Engine seeded from all 64 bits of `seed`.
std::mt19937_64 make_engine(std::uint64_t seed);

}  // namespace subsum

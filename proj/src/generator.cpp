#include "subsum/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subsum {

void validate(const GeneratorSpec& spec) {
  if (spec.m > spec.n) throw std::invalid_argument("generator: m must not exceed n");
  if (spec.min_value > spec.max_value) throw std::invalid_argument("generator: empty value range");
  if (spec.min_value < -kValueCap || spec.max_value > kValueCap) {
    throw std::invalid_argument("generator: value range exceeds the 2^62 cap");
  }
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over base + golden-ratio multiple of the stream.
  std::uint64_t z = base + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

namespace {

Wide uniform_wide(std::mt19937_64& rng, Wide lo, Wide hi) {
  const auto span = static_cast<unsigned __int128>(hi - lo);
  if (span <= std::numeric_limits<std::uint64_t>::max()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, static_cast<std::uint64_t>(span));
    return lo + static_cast<Wide>(dist(rng));
  }
  const unsigned __int128 draw = (static_cast<unsigned __int128>(rng()) << 64) | rng();
  return lo + static_cast<Wide>(draw % (span + 1));
}

}  // namespace

ProblemInstance generate_instance(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 rng = make_engine(spec.seed);
  std::uniform_int_distribution<Value> value_dist(spec.min_value, spec.max_value);
  std::vector<Value> values(spec.n);
  for (Value& v : values) v = value_dist(rng);

  Wide target = 0;
  if (spec.planted) {
    std::vector<Index> order(spec.n);
    std::iota(order.begin(), order.end(), Index{0});
    for (Index i = 0; i < spec.m; ++i) {
      std::uniform_int_distribution<Index> pick(i, spec.n - 1);
      std::swap(order[i], order[pick(rng)]);
      target += values[order[i]];
    }
    return ProblemInstance(std::move(values), target, spec.m);
  }
  ProblemInstance probe(values, 0, spec.m);
  const FeasibleRange range = feasible_range(probe);
  target = uniform_wide(rng, range.s_min, range.s_max);
  return ProblemInstance(std::move(values), target, spec.m);
}

std::string render_generated(const GeneratorSpec& spec, const ProblemInstance& inst) {
  std::string out = "# seed=" + std::to_string(spec.seed) + " n=" + std::to_string(spec.n) +
                    " m=" + std::to_string(spec.m) + " range=[" + std::to_string(spec.min_value) +
                    "," + std::to_string(spec.max_value) + "] planted=" +
                    (spec.planted ? "1" : "0") + "\n";
  out += render_instance(inst);
  return out;
}

}  // namespace subsum

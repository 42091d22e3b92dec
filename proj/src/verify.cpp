#include "subsum/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "subsum/generator.hpp"
#include "subsum/mitm.hpp"
#include "subsum/oracle.hpp"
#include "subsum/partition.hpp"

namespace subsum {

std::string render_solutions(const std::vector<Solution>& solutions, Wide target,
                             bool zero_based) {
  std::string out;
  const Index base = zero_based ? 0 : 1;
  for (const Solution& s : solutions) {
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(s.indices[i] + base);
    }
    out += s.indices.empty() ? "= " : " = ";
    out += to_string(target);
    out += '\n';
  }
  return out;
}

namespace {

std::string set_diff(const std::string& label, std::vector<Solution> expected,
                     std::vector<Solution> actual, Wide target) {
  normalize(expected);
  normalize(actual);
  std::vector<Solution> missing;
  std::vector<Solution> extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  std::string out = label + ": expected " + std::to_string(expected.size()) + " solutions, got " +
                    std::to_string(actual.size()) + "\n";
  if (!missing.empty()) out += "missing:\n" + render_solutions(missing, target);
  if (!extra.empty()) out += "unexpected:\n" + render_solutions(extra, target);
  return out;
}

// Oracle solutions with exactly k1 indices in one block and k2 in another,
// none elsewhere.
std::vector<Solution> pair_mode_expected(const std::vector<Solution>& oracle,
                                         const PartitionPlan& plan, Index k1, Index k2) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    for (const Index i : plan.blocks[b]) {
      if (block_of.size() <= i) block_of.resize(i + 1);
      block_of[i] = b;
    }
  }
  std::vector<Solution> out;
  for (const Solution& s : oracle) {
    std::vector<Index> counts(plan.blocks.size(), 0);
    for (const Index i : s.indices) ++counts[block_of[i]];
    bool hit = false;
    for (std::size_t a = 0; a < counts.size() && !hit; ++a) {
      for (std::size_t b = 0; b < counts.size() && !hit; ++b) {
        if (a == b || counts[a] != k1 || counts[b] != k2) continue;
        hit = true;
        for (std::size_t c = 0; c < counts.size(); ++c) {
          if (c != a && c != b && counts[c] != 0) hit = false;
        }
      }
    }
    if (hit) out.push_back(s);
  }
  return out;
}

}  // namespace

InstanceCheck verify_instance(const ProblemInstance& inst, const SolverOptions& options) {
  if (inst.size() > kVerifyMaxN) {
    throw std::invalid_argument("verify: n = " + std::to_string(inst.size()) +
                                " exceeds the oracle guard of " + std::to_string(kVerifyMaxN));
  }
  InstanceCheck check;
  const Index n = inst.size();
  const Index m = inst.cardinality();
  const Wide s = inst.target();
  const std::vector<Solution> oracle = enumerate_solutions(inst, kAll, options);

  auto compare = [&](const std::string& label, const std::vector<Solution>& expected,
                     const std::vector<Solution>& got) {
    std::vector<Solution> a = expected;
    std::vector<Solution> b = got;
    normalize(a);
    normalize(b);
    if (a != b || b.size() != got.size()) {
      check.ok = false;
      check.diff += set_diff(label, expected, got, s);
    }
  };

  SolverOptions direct = options;
  direct.use_complement = false;
  const SolverReport plain = solve(inst, kAll, direct);
  check.paths.push_back(m % 2 == 0 ? "even" : "odd");
  compare("mitm", oracle, plain.solutions);

  SolverOptions with_complement = options;
  with_complement.use_complement = true;
  const SolverReport comp = solve(inst, kAll, with_complement);
  if (comp.complemented) check.paths.push_back("complement");
  compare("mitm+complement", oracle, comp.solutions);

  for (std::size_t blocks : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    if (n == 0 || blocks > n) continue;
    for (const auto strategy : {PartitionStrategy::Contiguous, PartitionStrategy::RoundRobin}) {
      const PartitionPlan plan = make_partition(n, blocks, strategy);
      const SolverReport r = solve_composition_mode(inst, plan, kAll, options);
      compare("composition(blocks=" + std::to_string(blocks) + "," +
                  std::string(to_string(strategy)) + ")",
              oracle, r.solutions);
      if (blocks >= 2) {
        const Index k1 = m - m / 2;
        const Index k2 = m / 2;
        const SolverReport p = solve_pair_mode(inst, plan, k1, k2, kAll, options);
        compare("pair(blocks=" + std::to_string(blocks) + "," + std::string(to_string(strategy)) +
                    ")",
                pair_mode_expected(oracle, plan, k1, k2), p.solutions);
      }
    }
  }
  return check;
}

namespace {

void record(VerifyResult& result, const ProblemInstance& inst, const InstanceCheck& check) {
  ++result.trials_run;
  if (std::find(check.paths.begin(), check.paths.end(), "odd") != check.paths.end()) {
    ++result.odd_trials;
  }
  if (std::find(check.paths.begin(), check.paths.end(), "complement") != check.paths.end()) {
    ++result.complement_trials;
  }
  if (!check.ok) {
    ++result.discrepancies;
    if (!result.counterexample) result.counterexample = render_instance(inst) + check.diff;
  }
}

}  // namespace

VerifyResult run_verify(const VerifyConfig& config) {
  if (config.n_max > kVerifyMaxN || config.n_min > config.n_max) {
    throw std::invalid_argument("verify: need n_min <= n_max <= " + std::to_string(kVerifyMaxN));
  }
  if (config.value_ranges.empty()) throw std::invalid_argument("verify: no value ranges");
  VerifyResult result;
  for (std::size_t t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng = make_engine(mix_seed(config.seed, t));
    GeneratorSpec spec;
    spec.n = std::uniform_int_distribution<Index>(config.n_min, config.n_max)(rng);
    spec.m = std::uniform_int_distribution<Index>(0, spec.n)(rng);
    const auto& range = config.value_ranges[t % config.value_ranges.size()];
    spec.min_value = range.first;
    spec.max_value = range.second;
    spec.planted = (t / config.value_ranges.size()) % 2 == 0;
    spec.seed = rng();
    const ProblemInstance inst = generate_instance(spec);
    record(result, inst, verify_instance(inst, config.options));
  }
  return result;
}

VerifyResult run_verify(const std::vector<ProblemInstance>& corpus, const SolverOptions& options) {
  VerifyResult result;
  for (const ProblemInstance& inst : corpus) record(result, inst, verify_instance(inst, options));
  return result;
}

}  // namespace subsum

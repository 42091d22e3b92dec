#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "subsum/combinatorics.hpp"
#include "subsum/mitm.hpp"
#include "subsum/partition.hpp"

using namespace subsum;

namespace {

const std::vector<Value> kExample3 = {17, 2, 3, 23, 19, 1, 14, 20, 6, 10, 4, 25, 7, 49, 41, 5};

// Oracle solutions whose per-block counts are k1 in one block, k2 in
// another and zero elsewhere.
std::vector<Solution> split_filter(const std::vector<Solution>& all, const PartitionPlan& plan,
                                   Index k1, Index k2) {
  std::vector<Solution> out;
  for (const auto& s : all) {
    std::vector<Index> counts(plan.blocks.size(), 0);
    for (const Index i : s.indices) {
      for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
        const auto& blk = plan.blocks[b];
        if (std::find(blk.begin(), blk.end(), i) != blk.end()) ++counts[b];
      }
    }
    std::vector<Index> nonzero;
    for (const Index c : counts) {
      if (c != 0) nonzero.push_back(c);
    }
    const Index zeros = static_cast<Index>(counts.size() - nonzero.size());
    bool ok = false;
    if (k1 == 0 || k2 == 0) {
      ok = nonzero.size() == 1 && nonzero[0] == k1 + k2 && zeros >= 1;
      if (k1 + k2 == 0) ok = nonzero.empty();
    } else {
      ok = nonzero.size() == 2 &&
           ((nonzero[0] == k1 && nonzero[1] == k2) || (nonzero[0] == k2 && nonzero[1] == k1));
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("make_partition") {
  const auto c = make_partition(16, 2, PartitionStrategy::Contiguous);
  REQUIRE(c.blocks.size() == 2);
  CHECK(c.blocks[0] == std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(c.blocks[1] == std::vector<Index>{8, 9, 10, 11, 12, 13, 14, 15});

  const auto singles = make_partition(7, 7, PartitionStrategy::Contiguous);
  for (Index i = 0; i < 7; ++i) CHECK(singles.blocks[i] == std::vector<Index>{i});

  const auto rr = make_partition(16, 2, PartitionStrategy::RoundRobin);
  CHECK(rr.blocks[0] == std::vector<Index>{0, 2, 4, 6, 8, 10, 12, 14});
  CHECK(rr.blocks[1] == std::vector<Index>{1, 3, 5, 7, 9, 11, 13, 15});

  const auto uneven = make_partition(7, 3, PartitionStrategy::Contiguous);
  CHECK(uneven.blocks[0] == std::vector<Index>{0, 1});
  CHECK(uneven.blocks[1] == std::vector<Index>{2, 3});
  CHECK(uneven.blocks[2] == std::vector<Index>{4, 5, 6});

  CHECK_THROWS_AS(make_partition(5, 0, PartitionStrategy::Contiguous), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(5, 6, PartitionStrategy::RoundRobin), std::invalid_argument);
  CHECK(parse_partition_strategy("round-robin") == PartitionStrategy::RoundRobin);
  CHECK_THROWS_AS(parse_partition_strategy("zigzag"), std::invalid_argument);
}

TEST_CASE("property: partitions are disjoint covers of nonempty blocks") {
  for (Index n = 1; n <= 30; ++n) {
    for (std::size_t b = 1; b <= n; ++b) {
      for (const auto st : {PartitionStrategy::Contiguous, PartitionStrategy::RoundRobin}) {
        const auto plan = make_partition(n, b, st);
        std::vector<int> seen(n, 0);
        for (const auto& blk : plan.blocks) {
          REQUIRE_FALSE(blk.empty());
          for (std::size_t i = 0; i < blk.size(); ++i) {
            ++seen[blk[i]];
            if (i > 0) REQUIRE(blk[i - 1] < blk[i]);
          }
        }
        for (const int s : seen) REQUIRE(s == 1);
      }
    }
  }
}

TEST_CASE("enumerate_compositions") {
  const PartitionPlan two_two{{{0, 1}, {2, 3}}, PartitionStrategy::Contiguous};
  const auto c = enumerate_compositions(2, two_two);
  REQUIRE(c.size() == 3);
  CHECK(c[0].counts == std::vector<Index>{0, 2});
  CHECK(c[1].counts == std::vector<Index>{1, 1});
  CHECK(c[2].counts == std::vector<Index>{2, 0});

  const auto zero = enumerate_compositions(0, make_partition(6, 3, PartitionStrategy::Contiguous));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].counts == std::vector<Index>{0, 0, 0});

  const auto eight = enumerate_compositions(6, make_partition(16, 2, PartitionStrategy::Contiguous));
  CHECK(eight.size() == 7);
  CHECK(eight.front().counts == std::vector<Index>{0, 6});
  CHECK(eight.back().counts == std::vector<Index>{6, 0});

  // Caps: blocks of sizes 1 and 2 admit only (1,2) for m = 3.
  const PartitionPlan tight{{{0}, {1, 2}}, PartitionStrategy::Contiguous};
  const auto t = enumerate_compositions(3, tight);
  REQUIRE(t.size() == 1);
  CHECK(t[0].counts == std::vector<Index>{1, 2});
}

TEST_CASE("property: composition count matches a brute-force count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 9)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, std::min<Index>(n, 4))(rng);
    const auto plan = make_partition(n, b, PartitionStrategy::Contiguous);
    const Index m = std::uniform_int_distribution<Index>(0, n)(rng);
    // Count vectors by odometer over [0..|block|].
    std::size_t expected = 0;
    std::vector<Index> v(b, 0);
    for (;;) {
      Index sum = 0;
      for (const Index x : v) sum += x;
      if (sum == m) ++expected;
      std::size_t i = 0;
      while (i < b && v[i] == plan.blocks[i].size()) v[i++] = 0;
      if (i == b) break;
      ++v[i];
    }
    const auto comps = enumerate_compositions(m, plan);
    CHECK(comps.size() == expected);
    CHECK(std::is_sorted(comps.begin(), comps.end()));
  }
}

TEST_CASE("pair mode examples") {
  const ProblemInstance ex3(kExample3, 137, 6);
  const auto plan = make_partition(ex3, 2, PartitionStrategy::Contiguous);
  const SolverReport r = solve_pair_mode(ex3, plan, 3, 3);
  CHECK(std::find(r.solutions.begin(), r.solutions.end(), Solution{{0, 1, 3, 13, 14, 15}}) !=
        r.solutions.end());
  CHECK(r.entries_built == binomial(8, 3));
  CHECK(r.block_terms == std::vector<Count>{56, 56});
  CHECK(r.warnings.empty());

  const std::vector<Value> small = {1, 2, 3, 4};
  const auto sp = make_partition(4, 2, PartitionStrategy::Contiguous);
  const SolverReport five = solve_pair_mode(ProblemInstance(small, 5, 2), sp, 1, 1);
  CHECK(five.solutions == std::vector<Solution>{Solution{{0, 3}}, Solution{{1, 2}}});

  // {1, 2} lies entirely in block 1: pair mode cannot see it.
  const SolverReport three = solve_pair_mode(ProblemInstance(small, 3, 2), sp, 1, 1);
  CHECK(three.solutions.empty());
  CHECK(three.status == Status::None);

  // Blocks of two elements are too small for k = 3 halves.
  const auto tiny = make_partition(ex3, 8, PartitionStrategy::Contiguous);
  CHECK_FALSE(solve_pair_mode(ex3, tiny, 3, 3).warnings.empty());

  CHECK_THROWS_AS(solve_pair_mode(ex3, plan, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_pair_mode(ex3, make_partition(ex3, 1, PartitionStrategy::Contiguous), 3, 3),
                  std::invalid_argument);
}

TEST_CASE("property: pair mode equals the filtered oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_instance(rng, 2, 12, -10, 15);
    const Index m = inst.cardinality();
    const Index k1 = std::uniform_int_distribution<Index>(0, m)(rng);
    const Index k2 = m - k1;
    const std::size_t b = std::uniform_int_distribution<std::size_t>(2, std::min<Index>(inst.size(), 3))(rng);
    const auto plan = make_partition(inst, b, trial % 2 ? PartitionStrategy::RoundRobin
                                                        : PartitionStrategy::Contiguous);
    const auto expected = split_filter(testing::brute_force(inst), plan, k1, k2);
    SolverOptions opts;
    opts.threads = 1 + trial % 4;
    CHECK(solve_pair_mode(inst, plan, k1, k2, kAll, opts).solutions == expected);
  }
}

TEST_CASE("composition mode") {
  const ProblemInstance ex3(kExample3, 137, 6);
  for (std::size_t b : {1, 2, 3, 5}) {
    const auto plan = make_partition(ex3, b, PartitionStrategy::Contiguous);
    CHECK(solve_composition_mode(ex3, plan).solutions == solve_even(ex3).solutions);
  }
  // A single block is a direct enumeration of C(n, m).
  const auto one = solve_composition_mode(ex3, make_partition(ex3, 1, PartitionStrategy::Contiguous));
  CHECK(one.probes == 8008);
  CHECK(one.entries_built == 0);

  const auto none = solve_composition_mode(ProblemInstance(kExample3, 20, 6),
                                           make_partition(16, 2, PartitionStrategy::Contiguous));
  CHECK(none.status == Status::InfeasibleByRange);

  const auto zero = solve_composition_mode(ProblemInstance({1, 2}, 0, 0),
                                           make_partition(2, 2, PartitionStrategy::Contiguous));
  CHECK(zero.solutions == std::vector<Solution>{Solution{}});
}

TEST_CASE("property: composition mode equals the oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 13, trial % 2 ? -25 : 1, 25);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, std::min<Index>(inst.size(), 4))(rng);
    const auto plan = make_partition(inst, b, trial % 3 ? PartitionStrategy::Contiguous
                                                        : PartitionStrategy::RoundRobin);
    SolverOptions opts;
    opts.threads = 1 + trial % 3;
    CHECK(solve_composition_mode(inst, plan, kAll, opts).solutions == testing::brute_force(inst));
    const auto bounded = solve_composition_mode(inst, plan, 1, opts);
    CHECK(bounded.solutions.size() == std::min<std::size_t>(1, testing::brute_force(inst).size()));
  }
}

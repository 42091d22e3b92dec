#include <doctest.h>

#include <random>
#include <set>

#include "brute_force.hpp"
#include "subsum/combinatorics.hpp"
#include "subsum/errors.hpp"
#include "subsum/mitm.hpp"
#include "subsum/oracle.hpp"

using namespace subsum;

namespace {

const std::vector<Value> kExample3 = {17, 2, 3, 23, 19, 1, 14, 20, 6, 10, 4, 25, 7, 49, 41, 5};

std::vector<Index> iota(Index n) {
  std::vector<Index> u(n);
  for (Index i = 0; i < n; ++i) u[i] = i;
  return u;
}

Wide z_of_rank(const SumTable& t, Count rank) {
  for (const SumEntry& e : t.entries()) {
    if (e.rank == rank) return e.z;
  }
  FAIL("rank not in table");
  return 0;
}

// All disjoint complementary entry pairs by direct double loop over ranks.
std::set<std::pair<Count, Count>> brute_pairs(std::span<const Value> values, Index k, Wide s) {
  const auto n = static_cast<Index>(values.size());
  const Count total = binomial(n, k);
  std::vector<std::pair<Wide, std::vector<Index>>> items;
  for (Count r = 0; r < total; ++r) {
    const Combination c = unrank(n, k, r);
    Wide z = 0;
    for (const Index i : c.indices()) z += values[i];
    items.push_back({z, {c.indices().begin(), c.indices().end()}});
  }
  std::set<std::pair<Count, Count>> out;
  for (Count a = 0; a < total; ++a) {
    for (Count b = a + 1; b < total; ++b) {
      if (items[a].first + items[b].first != s) continue;
      std::set<Index> u(items[a].second.begin(), items[a].second.end());
      u.insert(items[b].second.begin(), items[b].second.end());
      if (u.size() == 2 * static_cast<std::size_t>(k)) out.insert({a, b});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("build_sum_table on the example set") {
  const SumTable t = build_sum_table(kExample3, iota(16), 3);
  CHECK(t.size() == 560);
  CHECK(z_of_rank(t, 1) == 42);
  CHECK(z_of_rank(t, 559) == 95);
  CHECK(t.decode(559) == std::vector<Index>{13, 14, 15});
  for (std::size_t i = 1; i < t.entries().size(); ++i) {
    const auto& a = t.entries()[i - 1];
    const auto& b = t.entries()[i];
    CHECK((a.z < b.z || (a.z == b.z && a.rank < b.rank)));
  }
  // Every entry's sum matches its decoded combination.
  for (const SumEntry& e : t.entries()) {
    Wide z = 0;
    for (const Index i : t.decode(e.rank)) z += kExample3[i];
    REQUIRE(z == e.z);
  }
}

TEST_CASE("build_sum_table edge cases") {
  const SumTable t0 = build_sum_table(std::vector<Value>{5, 6}, iota(2), 0);
  REQUIRE(t0.size() == 1);
  CHECK(t0.entries()[0].z == 0);

  // Universe mapping: positions decode through the universe.
  const std::vector<Value> vals = {10, 20, 30, 40};
  const std::vector<Index> universe = {0, 2, 3};
  const SumTable t = build_sum_table(vals, universe, 2);
  CHECK(t.size() == 3);
  CHECK(t.decode(0) == std::vector<Index>{0, 2});
  CHECK(t.decode(2) == std::vector<Index>{2, 3});
  CHECK(z_of_rank(t, 2) == 70);

  CHECK_THROWS_AS(build_sum_table(vals, universe, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_sum_table(vals, std::vector<Index>{2, 1}, 1), std::invalid_argument);
  SolverOptions small;
  small.memory_cap_entries = 100;
  CHECK_THROWS_AS(build_sum_table(kExample3, iota(16), 3, small), CapacityError);
}

TEST_CASE("build_sum_table is independent of the thread count") {
  SolverOptions par;
  par.threads = 8;
  const SumTable a = build_sum_table(kExample3, iota(16), 4);
  const SumTable b = build_sum_table(kExample3, iota(16), 4, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    CHECK(a.entries()[i].z == b.entries()[i].z);
    CHECK(a.entries()[i].rank == b.entries()[i].rank);
  }
}

TEST_CASE("tau") {
  CHECK(tau(137, 42) == 3990);
  CHECK(tau(137, 95) == 3990);
  CHECK(tau(-5, 0) == 0);
  CHECK(tau(12345, 0) == 0);
  CHECK_THROWS_AS(tau(kTargetCap, -kTargetCap), CapacityError);
}

TEST_CASE("property: tau collisions are equal roots or complementary roots") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int trial = 0; trial < 200000; ++trial) {
    const Wide s = d(rng);
    const Wide z1 = d(rng);
    // Bias half the draws toward actual collisions.
    const Wide z2 = trial % 2 == 0 ? d(rng) : (trial % 4 == 1 ? s - z1 : z1);
    const bool same = tau(s, z1) == tau(s, z2);
    REQUIRE(same == (z1 == z2 || z1 + z2 == s));
  }
}

TEST_CASE("find_pairs examples") {
  const SumTable t = build_sum_table(kExample3, iota(16), 3);
  const auto pairs = find_pairs(t, 137);
  CHECK(pairs.size() == 340);
  CHECK(std::find(pairs.begin(), pairs.end(), CollisionPair{1, 559, 42, 95}) != pairs.end());
  std::set<std::pair<Count, Count>> got;
  for (const auto& p : pairs) {
    CHECK(p.rank_a < p.rank_b);
    CHECK(p.z_a + p.z_b == 137);
    CHECK(got.insert({p.rank_a, p.rank_b}).second);
  }
  CHECK(got == brute_pairs(kExample3, 3, 137));

  const std::vector<Value> small = {1, 2, 3, 4};
  const auto p1 = find_pairs(build_sum_table(small, iota(4), 1), 5);
  std::set<std::pair<Count, Count>> s1;
  for (const auto& p : p1) s1.insert({p.rank_a, p.rank_b});
  CHECK(s1 == std::set<std::pair<Count, Count>>{{0, 3}, {1, 2}});

  const std::vector<Value> twins = {3, 3};
  const auto p2 = find_pairs(build_sum_table(twins, iota(2), 1), 6);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == CollisionPair{0, 1, 3, 3});

  CHECK(find_pairs(build_sum_table(twins, iota(2), 0), 0).empty());
  CHECK(find_pairs(t, 137, 5).size() == 5);
}

TEST_CASE("property: find_pairs equals the double-loop reference") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(2, 10)(rng);
    const Index k = std::uniform_int_distribution<Index>(1, n / 2)(rng);
    std::vector<Value> vals(n);
    for (Value& v : vals) v = std::uniform_int_distribution<Value>(-6, 6)(rng);
    const Wide s = std::uniform_int_distribution<int>(-12, 12)(rng);
    const SumTable t = build_sum_table(vals, iota(n), k);
    std::set<std::pair<Count, Count>> got;
    for (const auto& p : find_pairs(t, s, kAll, 3)) got.insert({p.rank_a, p.rank_b});
    CHECK(got == brute_pairs(vals, k, s));
  }
}

TEST_CASE("solve_even") {
  const ProblemInstance ex3(kExample3, 137, 6);
  const SolverReport r = solve_even(ex3);
  CHECK(r.status == Status::Found);
  CHECK(r.entries_built == 560);
  CHECK(r.solutions.size() == 34);
  CHECK(std::find(r.solutions.begin(), r.solutions.end(), Solution{{0, 1, 3, 13, 14, 15}}) !=
        r.solutions.end());

  const SolverReport out = solve_even(ProblemInstance(kExample3, 178, 6));
  CHECK(out.status == Status::InfeasibleByRange);
  CHECK(out.entries_built == 0);
  CHECK(out.solutions.empty());

  const SolverReport first = solve_even(ex3, 1);
  CHECK(first.solutions.size() == 1);
  CHECK_THROWS_AS(solve_even(ProblemInstance(kExample3, 137, 5)), std::invalid_argument);
}

TEST_CASE("solve_odd") {
  // m = 5 over n = 7: k = 2, one C(6, 2) = 15 table per exclusion.
  const std::vector<Value> seven = {3, 8, 1, 9, 4, 7, 2};
  const ProblemInstance inst(seven, 21, 5);
  const SolverReport r = solve_odd(inst);
  CHECK(r.exclusions_tried == 7);
  CHECK(r.table_sizes == std::vector<Count>(7, 15));
  CHECK(r.entries_built == 105);
  CHECK(r.solutions == testing::brute_force(inst));

  const ProblemInstance single({4, 9, 4, 1}, 4, 1);
  const SolverReport one = solve_odd(single);
  CHECK(one.solutions == std::vector<Solution>{Solution{{0}}, Solution{{2}}});
  CHECK(one.entries_built == 4);

  // First-success stops at the first exclusion that yields a solution.
  const SolverReport early = solve_odd(single, 1);
  CHECK(early.solutions == std::vector<Solution>{Solution{{0}}});
  CHECK(early.exclusions_tried == 1);
}

TEST_CASE("solve dispatch") {
  const SolverReport ex3 = solve(ProblemInstance(kExample3, 137, 6));
  CHECK(ex3.entries_built == 560);
  CHECK_FALSE(ex3.complemented);

  const SolverReport empty = solve(ProblemInstance({5, 6, 7}, 0, 0));
  CHECK(empty.solutions == std::vector<Solution>{Solution{}});
  CHECK(empty.entries_built == 1);

  // m = n - 1 becomes a single-element search on the complement.
  const ProblemInstance near_full({5, 1, 8, 3, 6}, 17, 4);
  const SolverReport c = solve(near_full);
  CHECK(c.complemented);
  CHECK(c.effective_cardinality == 1);
  CHECK(c.solutions == testing::brute_force(near_full));
  SolverOptions direct;
  direct.use_complement = false;
  CHECK(solve(near_full, kAll, direct).solutions == c.solutions);

  CHECK_THROWS_AS(solve(ProblemInstance({1}, 1, 2)), InfeasibleCardinality);
}

TEST_CASE("property: solvers equal the brute-force oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    const auto inst = testing::random_instance(rng, 0, 13, trial % 2 ? -20 : 1, 20);
    const auto expected = testing::brute_force(inst);
    SolverOptions opts;
    opts.threads = 1 + trial % 3;
    opts.use_complement = trial % 4 < 2;
    const SolverReport r = solve(inst, kAll, opts);
    REQUIRE(r.solutions == expected);
    CHECK((r.status == Status::Found) == !r.solutions.empty());
    if (!r.complemented && in_range(inst) && inst.cardinality() % 2 == 0) {
      CHECK(r.entries_built == binomial(inst.size(), inst.cardinality() / 2));
    }
  }
}

TEST_CASE("bounded solving returns distinct true solutions") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 4, 12, 1, 5);
    const auto expected = testing::brute_force(inst);
    const SolverReport r = solve(inst, 2);
    CHECK(r.solutions.size() == std::min<std::size_t>(2, expected.size()));
    for (const auto& s : r.solutions) {
      CHECK(std::binary_search(expected.begin(), expected.end(), s));
    }
  }
}

#include "subsum/mitm.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "subsum/combinatorics.hpp"
#include "subsum/errors.hpp"
#include "subsum/parallel.hpp"

namespace subsum {

std::span<const SumEntry> SumTable::equal_range(Wide z) const {
  const auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), SumEntry{z, 0},
                                         [](const SumEntry& a, const SumEntry& b) { return a.z < b.z; });
  return {lo, hi};
}

void SumTable::decode_into(Count rank, std::span<Index> out) const {
  unrank_into(static_cast<Index>(universe_.size()), rank, out);
  for (Index& i : out) i = universe_[i];
}

std::vector<Index> SumTable::decode(Count rank) const {
  std::vector<Index> out(k_);
  decode_into(rank, out);
  return out;
}

SumTable build_sum_table(std::span<const Value> values, std::span<const Index> universe, Index k,
                         const SolverOptions& options) {
  const auto size = static_cast<Index>(universe.size());
  if (k > size) throw std::invalid_argument("build_sum_table: k exceeds universe size");
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (universe[i] >= values.size() || (i > 0 && universe[i] <= universe[i - 1])) {
      throw std::invalid_argument("build_sum_table: universe must be strictly increasing indices");
    }
  }
  const Count total = binomial(size, k);
  if (total > options.memory_cap_entries) {
    throw CapacityError("sum table of C(" + std::to_string(size) + ", " + std::to_string(k) +
                        ") = " + std::to_string(total) + " entries exceeds the memory cap of " +
                        std::to_string(options.memory_cap_entries));
  }

  std::vector<SumEntry> entries(total);
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  const std::vector<RankRange> chunks = split_ranks(total, threads == 1 ? 1 : threads * 4);
  parallel_for(chunks.size(), threads, [&](std::size_t c) {
    const RankRange range = chunks[c];
    std::vector<Index> pos(k);
    unrank_into(size, range.begin, pos);
    for (Count r = range.begin; r < range.end; ++r) {
      // |x| <= 2^62 and k < 2^32 keep every k-sum far inside 128 bits.
      Wide z = 0;
      for (const Index p : pos) z += values[universe[p]];
      entries[r] = SumEntry{z, r};
      advance_indices(pos, size);
    }
  });
  std::sort(entries.begin(), entries.end(), [](const SumEntry& a, const SumEntry& b) {
    return a.z < b.z || (a.z == b.z && a.rank < b.rank);
  });
  return SumTable(std::move(entries), std::vector<Index>(universe.begin(), universe.end()), k);
}

Wide tau(Wide s, Wide z) { return checked_mul(checked_sub(s, z), z); }

namespace {

bool disjoint(std::span<const Index> a, std::span<const Index> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

// Scans table positions [begin, end). For each entry a with z_a <= S - z_a,
// looks up the complement S - z_a and calls
// emit(pair, indices_a, indices_b) for every disjoint partner b positioned
// after a. emit returns false to stop. Returns the number of lookups.
template <typename Emit>
Count scan_pairs(const SumTable& table, Wide s, std::size_t begin, std::size_t end, Emit&& emit) {
  const auto entries = table.entries();
  std::vector<Index> ia(table.k());
  std::vector<Index> ib(table.k());
  Count lookups = 0;
  for (std::size_t p = begin; p < end; ++p) {
    const SumEntry& a = entries[p];
    const Wide want = s - a.z;
    if (want < a.z) continue;
    ++lookups;
    const auto match = table.equal_range(want);
    if (match.empty()) continue;
    auto first = match.begin();
    if (want == a.z) {
      // Same z group: pair a only with entries after it so each unordered
      // pair is seen once.
      first = match.begin() + (static_cast<std::ptrdiff_t>(p) - (match.data() - entries.data())) + 1;
    }
    table.decode_into(a.rank, ia);
    for (auto it = first; it != match.end(); ++it) {
      table.decode_into(it->rank, ib);
      if (!disjoint(ia, ib)) continue;
      CollisionPair pair = a.rank < it->rank ? CollisionPair{a.rank, it->rank, a.z, it->z}
                                             : CollisionPair{it->rank, a.rank, it->z, a.z};
      if (!emit(pair, std::span<const Index>(ia), std::span<const Index>(ib))) return lookups;
    }
  }
  return lookups;
}

Solution merge_indices(std::span<const Index> a, std::span<const Index> b, const Index* extra) {
  Solution s;
  s.indices.reserve(a.size() + b.size() + (extra ? 1 : 0));
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.indices));
  if (extra) s.indices.insert(std::upper_bound(s.indices.begin(), s.indices.end(), *extra), *extra);
  return s;
}

constexpr std::size_t kMaxRecordedCollisions = std::size_t{1} << 16;

// Distinct solutions in discovery order, capped at `limit`.
struct Collector {
  std::size_t limit = kAll;
  std::set<Solution> seen;
  std::vector<CollisionPair> collisions;

  bool full() const { return seen.size() >= limit; }

  void add(Solution s, const CollisionPair* pair) {
    if (full()) return;
    if (pair && collisions.size() < kMaxRecordedCollisions) collisions.push_back(*pair);
    seen.insert(std::move(s));
  }
};

// Finds every 2k-subset of `universe` summing to `target` by pairing
// disjoint k-combinations, optionally extending each with `extra`.
void solve_pairs(std::span<const Value> values, std::span<const Index> universe, Index k,
                 Wide target, const Index* extra, const SolverOptions& options,
                 SolverReport& report, Collector& out) {
  const SumTable table = build_sum_table(values, universe, k, options);
  report.entries_built += table.size();
  report.table_sizes.push_back(table.size());

  if (k == 0) {
    // The single empty combination is its own (disjoint) partner.
    ++report.probes;
    if (target == 0) out.add(merge_indices({}, {}, extra), nullptr);
    return;
  }

  if (out.limit != kAll) {
    report.probes += scan_pairs(table, target, 0, table.size(),
                                [&](const CollisionPair& pair, auto a, auto b) {
                                  out.add(merge_indices(a, b, extra), &pair);
                                  return !out.full();
                                });
    ++report.tasks_run;
    return;
  }

  struct Found {
    Solution solution;
    CollisionPair pair;
  };
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  const std::vector<RankRange> chunks = split_ranks(table.size(), threads == 1 ? 1 : threads * 4);
  std::vector<std::vector<Found>> found(chunks.size());
  std::vector<Count> lookups(chunks.size(), 0);
  parallel_for(chunks.size(), threads, [&](std::size_t c) {
    lookups[c] = scan_pairs(table, target, chunks[c].begin, chunks[c].end,
                            [&](const CollisionPair& pair, auto a, auto b) {
                              found[c].push_back({merge_indices(a, b, extra), pair});
                              return true;
                            });
  });
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    report.probes += lookups[c];
    for (auto& f : found[c]) out.add(std::move(f.solution), &f.pair);
  }
  report.tasks_run += chunks.size();
}

}  // namespace

std::vector<CollisionPair> find_pairs(const SumTable& table, Wide s, std::size_t limit,
                                      std::size_t threads) {
  std::vector<CollisionPair> out;
  if (limit == 0) return out;
  if (limit != kAll || threads <= 1) {
    scan_pairs(table, s, 0, table.size(), [&](const CollisionPair& pair, auto, auto) {
      out.push_back(pair);
      return out.size() < limit;
    });
    return out;
  }
  const std::vector<RankRange> chunks = split_ranks(table.size(), threads * 4);
  std::vector<std::vector<CollisionPair>> found(chunks.size());
  parallel_for(chunks.size(), threads, [&](std::size_t c) {
    scan_pairs(table, s, chunks[c].begin, chunks[c].end, [&](const CollisionPair& pair, auto, auto) {
      found[c].push_back(pair);
      return true;
    });
  });
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

namespace {

std::vector<Index> iota_indices(Index n) {
  std::vector<Index> u(n);
  for (Index i = 0; i < n; ++i) u[i] = i;
  return u;
}

void finish(SolverReport& report, Collector& out) {
  report.solutions.assign(out.seen.begin(), out.seen.end());
  report.collisions = std::move(out.collisions);
  report.finish();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolverReport solve_even(const ProblemInstance& inst, std::size_t limit,
                        const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Index m = inst.cardinality();
  if (m % 2 != 0) throw std::invalid_argument("solve_even requires even m");
  SolverReport report;
  report.algorithm = Algorithm::Mitm;
  report.effective_cardinality = m;
  const FeasibleRange range = feasible_range(inst);
  if (options.range_pruning && !range.contains(inst.target())) {
    report.status = Status::InfeasibleByRange;
    return report;
  }
  Collector out;
  out.limit = limit;
  if (limit > 0) {
    const std::vector<Index> universe = iota_indices(inst.size());
    solve_pairs(inst.values(), universe, m / 2, inst.target(), nullptr, options, report, out);
  }
  finish(report, out);
  report.wall_ms = elapsed_ms(start);
  return report;
}

SolverReport solve_odd(const ProblemInstance& inst, std::size_t limit,
                       const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Index m = inst.cardinality();
  if (m % 2 != 1) throw std::invalid_argument("solve_odd requires odd m");
  SolverReport report;
  report.algorithm = Algorithm::Mitm;
  report.effective_cardinality = m;
  const FeasibleRange range = feasible_range(inst);
  if (options.range_pruning && !range.contains(inst.target())) {
    report.status = Status::InfeasibleByRange;
    return report;
  }
  const Index n = inst.size();
  const Index k = (m - 1) / 2;
  Collector out;
  out.limit = limit;
  std::vector<Index> universe;
  universe.reserve(n);
  for (Index excluded = 0; excluded < n && !out.full(); ++excluded) {
    universe.clear();
    for (Index i = 0; i < n; ++i) {
      if (i != excluded) universe.push_back(i);
    }
    ++report.exclusions_tried;
    const Wide target = checked_sub(inst.target(), inst.values()[excluded]);
    solve_pairs(inst.values(), universe, k, target, &excluded, options, report, out);
  }
  finish(report, out);
  report.wall_ms = elapsed_ms(start);
  return report;
}

SolverReport solve(const ProblemInstance& inst, std::size_t limit, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Index n = inst.size();
  const Index m = inst.cardinality();
  if (m > n) throw InfeasibleCardinality("cardinality exceeds set size");

  const bool complemented = options.use_complement && 2 * static_cast<Count>(m) > n;
  const ProblemInstance work = complemented ? complement_transform(inst) : inst;
  SolverReport report = work.cardinality() % 2 == 0 ? solve_even(work, limit, options)
                                                    : solve_odd(work, limit, options);
  report.complemented = complemented;
  if (complemented) {
    for (Solution& s : report.solutions) s = complement_of(s, n);
    normalize(report.solutions);
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace subsum

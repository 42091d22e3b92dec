#pragma once

#include <optional>
#include <span>
#include <vector>

#include "subsum/types.hpp"

namespace subsum {

/// Exact binomial coefficient C(n, k); 0 when k > n. Throws CapacityError
/// when the result does not fit in Count.
Count binomial(Count n, Count k);

/// A strictly increasing tuple of k indices drawn from {0, ..., n-1}.
class Combination {
 public:
  Combination() = default;
  /// Throws std::invalid_argument unless indices is strictly increasing and
  /// every entry is < n.
  Combination(Index n, std::vector<Index> indices);

  Index universe() const noexcept { return n_; }
  Index size() const noexcept { return static_cast<Index>(indices_.size()); }
  std::span<const Index> indices() const noexcept { return indices_; }
  Index operator[](std::size_t i) const noexcept { return indices_[i]; }

  /// Advances to the lexicographic successor in place. Returns false (and
  /// leaves the tuple unchanged) when this is the last combination.
  bool advance() noexcept;

  friend bool operator==(const Combination&, const Combination&) = default;
  friend auto operator<=>(const Combination& a, const Combination& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  Index n_ = 0;
  std::vector<Index> indices_;
};

/// (0, 1, ..., k-1). Throws std::invalid_argument when k > n.
Combination first_combination(Index n, Index k);

/// Lexicographic successor, or nullopt after (n-k, ..., n-1).
std::optional<Combination> next_combination(const Combination& c);

/// 0-based lexicographic position of c among all C(n, k) combinations.
Count rank(const Combination& c);

/// Inverse of rank. Throws std::invalid_argument when r >= C(n, k).
Combination unrank(Index n, Index k, Count r);

/// Writes the combination of the given lexicographic rank into out
/// (out.size() == k). Allocation-free variant of unrank for hot loops;
/// the rank must be valid.
void unrank_into(Index n, Count r, std::span<Index> out);

/// Advances a raw strictly increasing tuple over {0..n-1} in place.
bool advance_indices(std::span<Index> idx, Index n) noexcept;

}  // namespace subsum

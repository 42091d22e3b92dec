#include "subsum/combinatorics.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

constexpr Count kOverflow = std::numeric_limits<Count>::max();
constexpr std::size_t kPascalRows = 68;

// Pascal triangle for n < 68, saturated at kOverflow. C(67, 33) is the
// largest central coefficient that fits in 64 bits.
using Pascal = std::array<std::array<Count, kPascalRows>, kPascalRows>;

constexpr Pascal make_pascal() {
  Pascal t{};
  for (std::size_t n = 0; n < kPascalRows; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      const Count a = t[n - 1][k - 1];
      const Count b = k < n ? t[n - 1][k] : 0;
      t[n][k] = (a == kOverflow || b == kOverflow || a > kOverflow - b) ? kOverflow : a + b;
    }
  }
  return t;
}

constexpr Pascal kPascal = make_pascal();

Count binomial_multiplicative(Count n, Count k) {
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (Count i = 0; i < k; ++i) {
    // r * (n - i) is divisible by (i + 1): it equals C(n, i+1) * (i + 1).
    r = r * (n - i) / (i + 1);
    if (r > kOverflow - 1) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64-bit range");
    }
  }
  return static_cast<Count>(r);
}

}  // namespace

Count binomial(Count n, Count k) {
  if (k > n) return 0;
  if (n < kPascalRows) {
    const Count v = kPascal[n][k];
    if (v == kOverflow) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64-bit range");
    }
    return v;
  }
  return binomial_multiplicative(n, k);
}

Combination::Combination(Index n, std::vector<Index> indices) : n_(n), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= n_) throw std::invalid_argument("combination index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("combination indices must be strictly increasing");
    }
  }
}

bool advance_indices(std::span<Index> idx, Index n) noexcept {
  const std::size_t k = idx.size();
  // Rightmost position that has not reached its maximum n - k + i.
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool Combination::advance() noexcept { return advance_indices(indices_, n_); }

Combination first_combination(Index n, Index k) {
  if (k > n) throw std::invalid_argument("first_combination: k > n");
  std::vector<Index> idx(k);
  for (Index i = 0; i < k; ++i) idx[i] = i;
  return Combination(n, std::move(idx));
}

std::optional<Combination> next_combination(const Combination& c) {
  Combination next = c;
  if (!next.advance()) return std::nullopt;
  return next;
}

// Lexicographic rank via the combinatorial number system on the dual tuple
// d_i = n-1-c_{k-1-i}: lex order on c is reverse colex order on d.
Count rank(const Combination& c) {
  const Index n = c.universe();
  const Index k = c.size();
  Count colex = 0;
  for (Index i = 0; i < k; ++i) {
    const Index d = n - 1 - c[k - 1 - i];
    colex += binomial(d, i + 1);
  }
  return binomial(n, k) - 1 - colex;
}

void unrank_into(Index n, Count r, std::span<Index> out) {
  const auto k = static_cast<Index>(out.size());
  Count colex = binomial(n, k) - 1 - r;
  // Greedy colex decoding, largest position first; d strictly decreases.
  Index d = n;
  for (Index i = k; i > 0; --i) {
    do {
      --d;
    } while (binomial(d, i) > colex);
    colex -= binomial(d, i);
    out[k - i] = n - 1 - d;
  }
}

Combination unrank(Index n, Index k, Count r) {
  if (k > n) throw std::invalid_argument("unrank: k > n");
  if (r >= binomial(n, k)) throw std::invalid_argument("unrank: rank out of range");
  std::vector<Index> idx(k);
  unrank_into(n, r, idx);
  return Combination(n, std::move(idx));
}

}  // namespace subsum

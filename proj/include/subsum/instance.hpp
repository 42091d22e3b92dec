#pragma once

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subsum/types.hpp"

namespace subsum {

/// Fixed-cardinality subset-sum query: does some set of `cardinality`
/// distinct indices of `values` sum to `target`?
///
/// Values keep input order and may repeat. Every value satisfies
/// |v| <= kValueCap and the target satisfies |S| <= kTargetCap; the
/// constructor throws CapacityError otherwise.
class ProblemInstance {
 public:
  ProblemInstance() = default;
  ProblemInstance(std::vector<Value> values, Wide target, Index cardinality);

  std::span<const Value> values() const noexcept { return values_; }
  Index size() const noexcept { return static_cast<Index>(values_.size()); }
  Wide target() const noexcept { return target_; }
  Index cardinality() const noexcept { return cardinality_; }

  ProblemInstance with_target(Wide target) const;
  ProblemInstance with_cardinality(Index cardinality) const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::vector<Value> values_;
  Wide target_ = 0;
  Index cardinality_ = 0;
};

struct FeasibleRange {
  Wide s_min = 0;
  Wide s_max = 0;

  bool contains(Wide s) const noexcept { return s_min <= s && s <= s_max; }
  friend bool operator==(const FeasibleRange&, const FeasibleRange&) = default;
};

/// Sum of the m smallest and of the m largest values. Throws
/// InfeasibleCardinality when m > n.
FeasibleRange feasible_range(const ProblemInstance& inst);

/// s_min <= S <= s_max.
bool in_range(const ProblemInstance& inst);

Wide total_sum(const ProblemInstance& inst);

/// Same values, cardinality n - m, target total - S. An index set solves
/// the result iff its complement solves inst.
ProblemInstance complement_transform(const ProblemInstance& inst);

/// Reads the text format: a header line `n m S`, then n integers. Lines
/// starting with '#' are comments. Throws ParseError (with line and column)
/// on malformed input and CapacityError-style width violations are reported
/// as ParseError as well.
ProblemInstance parse_instance(std::string_view text);
ProblemInstance read_instance(std::istream& in);
ProblemInstance load_instance(const std::string& path);

/// Canonical writer: `n m S\n` followed by the values on one line.
std::string render_instance(const ProblemInstance& inst);

}  // namespace subsum

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace subsum {

/// Element value of the input set. Magnitude is capped at kValueCap.
using Value = std::int64_t;
/// Accumulator for k-sums, targets and tau products.
using Wide = __int128;
/// Counts of combinations, table entries and ranks.
using Count = std::uint64_t;
/// 0-based position of an element in the input order.
using Index = std::uint32_t;

inline constexpr Value kValueCap = Value{1} << 62;
inline constexpr Wide kTargetCap = Wide{1} << 120;

/// Sentinel for "no limit" on the number of solutions.
inline constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

std::string to_string(Wide v);

/// Parses a base-10 signed integer that fits in Wide. Returns false on any
/// malformed input or overflow.
bool parse_wide(std::string_view text, Wide& out);

/// Checked arithmetic; throws CapacityError on overflow.
Wide checked_add(Wide a, Wide b);
Wide checked_sub(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

}  // namespace subsum

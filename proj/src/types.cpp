#include "subsum/types.hpp"

#include <algorithm>

#include "subsum/errors.hpp"

namespace subsum {

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the unsigned magnitude so that the minimum value is handled.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                   : static_cast<unsigned __int128>(v);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

bool parse_wide(std::string_view text, Wide& out) {
  if (text.empty()) return false;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  Wide acc = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return false;
    const int digit = c - '0';
    // Accumulate negatively so the full range is reachable.
    if (__builtin_mul_overflow(acc, Wide{10}, &acc)) return false;
    if (__builtin_sub_overflow(acc, Wide{digit}, &acc)) return false;
  }
  if (!negative) {
    if (__builtin_mul_overflow(acc, Wide{-1}, &acc)) return false;
  }
  out = acc;
  return true;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("128-bit addition overflow");
  return r;
}

Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw CapacityError("128-bit subtraction overflow");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("128-bit multiplication overflow");
  return r;
}

}  // namespace subsum

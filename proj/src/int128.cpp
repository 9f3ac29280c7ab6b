#include "cpt/int128.hpp"

#include <algorithm>
#include <cmath>

namespace cpt {

std::string to_string(int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  uint128 mag = negative ? -static_cast<uint128>(value) : static_cast<uint128>(value);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

}  // namespace cpt

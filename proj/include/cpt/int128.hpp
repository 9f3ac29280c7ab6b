#pragma once

#include <cstdint>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

// All arithmetic-function values and summatory accumulators are 128-bit.
// Overflow is always detected and reported, never wrapped.
using int128 = __int128;
using uint128 = unsigned __int128;

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("128-bit addition overflow");
  }
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("128-bit subtraction overflow");
  }
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("128-bit multiplication overflow");
  }
  return r;
}

// base^exp with overflow detection; 0^0 = 1.
inline int128 checked_pow(int128 base, unsigned exp) {
  int128 result = 1;
  int128 b = base;
  while (exp != 0) {
    if (exp & 1u) result = checked_mul(result, b);
    exp >>= 1u;
    if (exp != 0) b = checked_mul(b, b);
  }
  return result;
}

std::string to_string(int128 value);

// Largest r with r*r <= x.
std::uint64_t isqrt(std::uint64_t x);

}  // namespace cpt

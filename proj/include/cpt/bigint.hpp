#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpt/int128.hpp"

namespace cpt {

// Sign-magnitude arbitrary-precision integer over base-2^32 limbs.
// Just large enough for the exact rational arithmetic the summatory
// module needs (lcm(1..n) for n in the low thousands); not a general
// purpose bignum.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by intent
  static BigInt from_int128(int128 v);
  static BigInt from_string(std::string_view decimal);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt& negate();
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  // In-place multiply / exact divide by a machine word. div_exact_small
  // requires divisibility and d != 0.
  BigInt& mul_small(std::uint32_t m);
  BigInt& div_exact_small(std::uint32_t d);

  // Quotient and remainder truncated toward zero; remainder has the
  // sign of the dividend. Throws on division by zero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative result

  bool operator==(const BigInt& rhs) const;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  std::string to_string() const;
  // Lossy; huge values saturate to +/-inf.
  double to_double() const;
  // a/b as double, valid even when both exceed double range.
  static double ratio(const BigInt& a, const BigInt& b);

  std::size_t bit_length() const;

 private:
  int sign_ = 0;                      // -1, 0, +1
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros

  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  void shift_left_bits(std::size_t bits);
  void shift_right_bits(std::size_t bits);
  std::size_t trailing_zero_bits() const;
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i);
};

}  // namespace cpt

#include "cpt/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cpt {

namespace {
constexpr std::uint64_t kLimbBase = 1ULL << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  auto mag = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_int128(int128 v) {
  BigInt r;
  if (v == 0) return r;
  r.sign_ = v < 0 ? -1 : 1;
  uint128 mag = v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
  while (mag != 0) {
    r.limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  return r;
}

BigInt BigInt::from_string(std::string_view decimal) {
  BigInt r;
  bool negative = false;
  std::size_t i = 0;
  if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
    negative = decimal[i] == '-';
    ++i;
  }
  if (i == decimal.size()) throw std::invalid_argument("BigInt: empty decimal string");
  for (; i < decimal.size(); ++i) {
    char c = decimal[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in decimal string");
    r.mul_small(10);
    std::uint32_t carry = static_cast<std::uint32_t>(c - '0');
    for (std::size_t j = 0; carry != 0; ++j) {
      if (j == r.limbs_.size()) {
        r.limbs_.push_back(carry);
        break;
      }
      std::uint64_t s = static_cast<std::uint64_t>(r.limbs_[j]) + carry;
      r.limbs_[j] = static_cast<std::uint32_t>(s & 0xffffffffu);
      carry = static_cast<std::uint32_t>(s >> 32);
    }
    if (!r.limbs_.empty()) r.sign_ = 1;
  }
  r.trim();
  if (negative && r.sign_ != 0) r.sign_ = -1;
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt& BigInt::negate() {
  sign_ = -sign_;
  return *this;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  const auto& longer = a.size() >= b.size() ? a : b;
  const auto& shorter = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(longer.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < longer.size(); ++i) {
    std::uint64_t s = carry + longer[i] + (i < shorter.size() ? shorter[i] : 0u);
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (s < 0) {
      s += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(s));
  }
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
    return *this;
  }
  int cmp = compare_magnitude(*this, rhs);
  if (cmp == 0) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  if (cmp > 0) {
    limbs_ = sub_magnitude(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_magnitude(rhs.limbs_, limbs_);
    sign_ = rhs.sign_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  BigInt neg = rhs;
  neg.negate();
  return *this += neg;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt r;
  if (lhs.sign_ == 0 || rhs.sign_ == 0) return r;
  r.sign_ = lhs.sign_ * rhs.sign_;
  r.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t a = lhs.limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t j = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[j] + carry;
      r.limbs_[j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++j;
    }
  }
  r.trim();
  return r;
}

BigInt& BigInt::mul_small(std::uint32_t m) {
  if (sign_ == 0) return *this;
  if (m == 0) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigInt& BigInt::div_exact_small(std::uint32_t d) {
  if (d == 0) throw std::domain_error("BigInt: division by zero");
  if (sign_ == 0) return *this;
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  if (rem != 0) throw std::domain_error("BigInt: div_exact_small with nonzero remainder");
  trim();
  return *this;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * 32 +
         (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::set_bit(std::size_t i) {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= (1u << (i % 32));
  if (sign_ == 0) sign_ = 1;
}

void BigInt::shift_left_bits(std::size_t bits) {
  if (sign_ == 0 || bits == 0) return;
  std::size_t limb_shift = bits / 32;
  std::size_t bit_shift = bits % 32;
  std::vector<std::uint32_t> out(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    out[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
    out[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  limbs_ = std::move(out);
  trim();
}

void BigInt::shift_right_bits(std::size_t bits) {
  if (sign_ == 0 || bits == 0) return;
  std::size_t limb_shift = bits / 32;
  std::size_t bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    sign_ = 0;
    limbs_.clear();
    return;
  }
  std::vector<std::uint32_t> out(limbs_.size() - limb_shift, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
    std::uint64_t hi = 0;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size()) {
      hi = static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
    }
    out[i] = static_cast<std::uint32_t>((lo | hi) & 0xffffffffu);
  }
  limbs_ = std::move(out);
  trim();
}

std::size_t BigInt::trailing_zero_bits() const {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) {
      return i * 32 + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    }
  }
  return 0;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  BigInt q, r;
  int cmp = compare_magnitude(a, b);
  if (cmp < 0) {
    r = a;
    return {q, r};
  }
  // Binary long division on magnitudes.
  std::size_t n = a.bit_length();
  BigInt babs = b.abs();
  for (std::size_t i = n; i-- > 0;) {
    r.shift_left_bits(1);
    if (a.bit(i)) r.set_bit(0);
    if (r.sign_ != 0 && compare_magnitude(r, babs) >= 0) {
      r.limbs_ = sub_magnitude(r.limbs_, babs.limbs_);
      r.trim();
      q.set_bit(i);
    }
  }
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  return {q, r};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  if (a.sign_ < 0) a.sign_ = 1;
  if (b.sign_ < 0) b.sign_ = 1;
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  std::size_t az = a.trailing_zero_bits();
  std::size_t bz = b.trailing_zero_bits();
  std::size_t shift = std::min(az, bz);
  a.shift_right_bits(az);
  b.shift_right_bits(bz);
  while (true) {
    if (compare_magnitude(a, b) > 0) std::swap(a, b);
    // b >= a, both odd
    b.limbs_ = sub_magnitude(b.limbs_, a.limbs_);
    b.trim();
    if (b.sign_ == 0 || b.limbs_.empty()) break;
    b.shift_right_bits(b.trailing_zero_bits());
  }
  a.shift_left_bits(shift);
  return a;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int cmp = compare_magnitude(*this, rhs) * (sign_ == 0 ? 0 : sign_);
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  std::vector<std::uint32_t> work = limbs_;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    chunks.push_back(static_cast<std::uint32_t>(rem));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

double BigInt::to_double() const {
  if (sign_ == 0) return 0.0;
  double mag = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
    if (std::isinf(mag)) break;
  }
  return sign_ < 0 ? -mag : mag;
}

double BigInt::ratio(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("BigInt::ratio: zero denominator");
  if (a.sign_ == 0) return 0.0;
  auto top_bits = [](const BigInt& v) {
    // Most significant 64 bits of the magnitude.
    std::size_t len = v.bit_length();
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < 64 && i < len; ++i) {
      m = (m << 1) | static_cast<std::uint64_t>(v.bit(len - 1 - i));
    }
    return m;
  };
  double q = static_cast<double>(top_bits(a)) / static_cast<double>(top_bits(b));
  auto la = static_cast<std::int64_t>(std::min<std::size_t>(a.bit_length(), 64));
  auto lb = static_cast<std::int64_t>(std::min<std::size_t>(b.bit_length(), 64));
  std::int64_t exp = (static_cast<std::int64_t>(a.bit_length()) - la) -
                     (static_cast<std::int64_t>(b.bit_length()) - lb);
  double r = std::ldexp(q, static_cast<int>(exp));
  return a.sign_ * b.sign_ < 0 ? -r : r;
}

}  // namespace cpt

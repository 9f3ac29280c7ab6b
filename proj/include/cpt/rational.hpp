#pragma once

#include <string>
#include <utility>

#include "cpt/bigint.hpp"

namespace cpt {

// Exact rational with positive denominator, kept in lowest terms.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  explicit BigRational(BigInt value) : num_(std::move(value)), den_(1) {}
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(const BigRational& lhs, const BigRational& rhs);

  bool operator==(const BigRational& rhs) const = default;
  std::strong_ordering operator<=>(const BigRational& rhs) const;

  BigRational abs() const;
  double to_double() const { return BigInt::ratio(num_, den_); }
  std::string to_string() const;  // "num/den", or "num" when den == 1

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

}  // namespace cpt

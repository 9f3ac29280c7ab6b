#include "cpt/rational.hpp"

#include <stdexcept>

namespace cpt {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
  if (den_.is_negative()) {
    den_.negate();
    num_.negate();
  }
  reduce();
}

void BigRational::reduce() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g > BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  reduce();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  reduce();
  return *this;
}

BigRational operator*(const BigRational& lhs, const BigRational& rhs) {
  return {lhs.num_ * rhs.num_, lhs.den_ * rhs.den_};
}

std::strong_ordering BigRational::operator<=>(const BigRational& rhs) const {
  return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

BigRational BigRational::abs() const {
  BigRational r = *this;
  if (r.num_.is_negative()) r.num_.negate();
  return r;
}

std::string BigRational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace cpt

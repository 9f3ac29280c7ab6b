#pragma once

#include <cstdint>
#include <vector>

#include "cpt/int128.hpp"

namespace cpt {

// One prime-power entry of a factorization, primes strictly increasing.
struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::vector<PrimePower> factors;

  std::size_t omega() const { return factors.size(); }
  bool squarefree() const {
    for (const auto& f : factors) {
      if (f.exponent > 1) return false;
    }
    return true;
  }
};

// Smallest-prime-factor table for 2..limit, built by a linear sieve.
// Immutable after construction; every query below is a pure function of
// (sieve, arguments) and safe to call concurrently.
class FactorSieve {
 public:
  static constexpr std::uint64_t kDefaultMemoryBudgetBytes = 2ULL << 30;

  static FactorSieve build(std::uint64_t limit,
                           std::uint64_t memory_budget_bytes = kDefaultMemoryBudgetBytes);

  std::uint64_t limit() const { return limit_; }

  // n must be a prime or composite in [2, limit].
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;

  Factorization factorize(std::uint64_t n) const;

  void check_range(std::uint64_t n) const;  // throws RangeError unless 1 <= n <= limit

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;  // index 0..limit; 0 and 1 unused

  FactorSieve() = default;
};

// Number of distinct prime divisors; omega(1) = 0.
unsigned omega(const FactorSieve& sieve, std::uint64_t n);

// 0 when n is not square-free, otherwise (-1)^omega(n).
int mobius(const FactorSieve& sieve, std::uint64_t n);

// delta_k: 1 at n=1, 0 when a square divides n, (k-1)^omega(n) on
// square-free n. delta_2 = mu^2, delta_1 = indicator of n=1.
int128 delta(const FactorSieve& sieve, std::uint64_t k, std::uint64_t n);

// rho_k(n) = k^omega(n): ordered coprime k-factorizations of n.
int128 rho(const FactorSieve& sieve, std::uint64_t k, std::uint64_t n);

// Euler totient via the factorization product formula.
std::uint64_t euler_phi(const FactorSieve& sieve, std::uint64_t n);

// #{ m <= x : gcd(m, a) = 1 }; x is unrestricted, a must be sieved.
std::uint64_t coprime_count(const FactorSieve& sieve, std::uint64_t x, std::uint64_t a);

// Product of the distinct prime divisors; radical(1) = 1.
std::uint64_t radical(const FactorSieve& sieve, std::uint64_t n);

// All divisors of the factored integer, in generation order (not sorted).
std::vector<std::uint64_t> divisors(const Factorization& f);

// Given f(1..N) (index 0 unused), returns g(1..N) with
// g(1) = f(1), g(n) = f(n) - sum of g(d) over proper divisors d of n,
// i.e. g = mu * f, so that sum_{n<=x} f(n) = sum_{n<=x} floor(x/n) g(n).
std::vector<int128> invert_summation(const std::vector<int128>& f);

}  // namespace cpt

#include "cpt/sieve.hpp"

#include <string>

#include "cpt/error.hpp"

namespace cpt {

FactorSieve FactorSieve::build(std::uint64_t limit, std::uint64_t memory_budget_bytes) {
  if (limit < 1) throw RangeError("build_sieve: limit must be >= 1");
  std::uint64_t needed = (limit + 1) * sizeof(std::uint32_t);
  if (limit >= (1ULL << 32) || needed > memory_budget_bytes) {
    throw CapacityError("build_sieve: limit " + std::to_string(limit) +
                        " exceeds the memory budget of " +
                        std::to_string(memory_budget_bytes) + " bytes");
  }
  FactorSieve sieve;
  sieve.limit_ = limit;
  sieve.spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (sieve.spf_[i] == 0) {
      sieve.spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > sieve.spf_[i] || i * p > limit) break;
      sieve.spf_[i * p] = p;
    }
  }
  return sieve;
}

void FactorSieve::check_range(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " +
                     std::to_string(limit_) + "]");
  }
}

std::uint32_t FactorSieve::smallest_prime_factor(std::uint64_t n) const {
  check_range(n);
  if (n < 2) throw RangeError("smallest_prime_factor: n must be >= 2");
  return spf_[n];
}

Factorization FactorSieve::factorize(std::uint64_t n) const {
  check_range(n);
  Factorization result;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  return result;
}

unsigned omega(const FactorSieve& sieve, std::uint64_t n) {
  return static_cast<unsigned>(sieve.factorize(n).omega());
}

int mobius(const FactorSieve& sieve, std::uint64_t n) {
  Factorization f = sieve.factorize(n);
  if (!f.squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

int128 delta(const FactorSieve& sieve, std::uint64_t k, std::uint64_t n) {
  if (k < 1) throw RangeError("delta: k must be >= 1");
  Factorization f = sieve.factorize(n);
  if (!f.squarefree()) return 0;
  return checked_pow(static_cast<int128>(k) - 1, static_cast<unsigned>(f.omega()));
}

int128 rho(const FactorSieve& sieve, std::uint64_t k, std::uint64_t n) {
  if (k < 1) throw RangeError("rho: k must be >= 1");
  return checked_pow(static_cast<int128>(k), omega(sieve, n));
}

std::uint64_t euler_phi(const FactorSieve& sieve, std::uint64_t n) {
  std::uint64_t result = 1;
  for (const auto& f : sieve.factorize(n).factors) {
    result *= f.prime - 1;
    for (std::uint32_t e = 1; e < f.exponent; ++e) result *= f.prime;
  }
  return result;
}

std::uint64_t coprime_count(const FactorSieve& sieve, std::uint64_t x, std::uint64_t a) {
  if (a < 1) throw RangeError("coprime_count: a must be >= 1");
  sieve.check_range(a);
  if (x == 0) return 0;
  Factorization f = sieve.factorize(a);
  // Inclusion-exclusion over the square-free divisors of rad(a).
  std::uint64_t count = 0;
  std::size_t subsets = std::size_t{1} << f.omega();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t d = 1;
    bool odd = false;
    for (std::size_t i = 0; i < f.omega(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= f.factors[i].prime;
        odd = !odd;
      }
    }
    if (odd) {
      count -= x / d;
    } else {
      count += x / d;
    }
  }
  return count;
}

std::uint64_t radical(const FactorSieve& sieve, std::uint64_t n) {
  std::uint64_t rad = 1;
  for (const auto& f : sieve.factorize(n).factors) rad *= f.prime;
  return rad;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& pp : f.factors) {
    std::size_t existing = divs.size();
    std::uint64_t power = 1;
    for (std::uint32_t e = 0; e < pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

std::vector<int128> invert_summation(const std::vector<int128>& f) {
  if (f.size() < 2) throw RangeError("invert_summation: need at least f(1)");
  std::size_t n = f.size() - 1;
  std::vector<int128> g = f;
  // Divisor recursion g(m) = f(m) - sum_{d|m, d<m} g(d), run over multiples.
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t m = 2 * d; m <= n; m += d) {
      g[m] = checked_sub(g[m], g[d]);
    }
  }
  return g;
}

}  // namespace cpt

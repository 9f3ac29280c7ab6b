#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cpt/error.hpp"
#include "cpt/sieve.hpp"

using namespace cpt;

namespace {

const FactorSieve& shared_sieve() {
  static FactorSieve sieve = FactorSieve::build(600000);
  return sieve;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_sieve basics") {
  FactorSieve tiny = FactorSieve::build(1);
  CHECK(tiny.limit() == 1);
  CHECK(tiny.factorize(1).factors.empty());

  FactorSieve ten = FactorSieve::build(10);
  CHECK(ten.smallest_prime_factor(9) == 3);
  CHECK(ten.smallest_prime_factor(10) == 2);

  FactorSieve hundred = FactorSieve::build(100);
  CHECK(hundred.smallest_prime_factor(91) == 7);
}

TEST_CASE("build_sieve enforces the memory budget and names it") {
  try {
    FactorSieve::build(1000000, 1024);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("1024") != std::string::npos);
  }
}

TEST_CASE("factorize examples") {
  const auto& sieve = shared_sieve();
  CHECK(sieve.factorize(1).factors.empty());
  auto twelve = sieve.factorize(12);
  REQUIRE(twelve.factors.size() == 2);
  CHECK(twelve.factors[0] == PrimePower{2, 2});
  CHECK(twelve.factors[1] == PrimePower{3, 1});
  auto prime = sieve.factorize(97);
  REQUIRE(prime.factors.size() == 1);
  CHECK(prime.factors[0] == PrimePower{97, 1});
}

TEST_CASE("sieve invariants hold on a dense range") {
  const auto& sieve = shared_sieve();
  for (std::uint64_t m = 2; m <= 3000; ++m) {
    std::uint64_t p = sieve.smallest_prime_factor(m);
    CHECK(is_prime_trial(p));
    CHECK(m % p == 0);
    if (is_prime_trial(m)) {
      CHECK(p == m);
    } else {
      bool small_enough = p * p <= m;
      bool cofactor_prime = is_prime_trial(m / p);
      CHECK((small_enough || cofactor_prime));
    }
    // p really is the smallest prime factor
    for (std::uint64_t q = 2; q < p; ++q) CHECK(m % q != 0);
  }
}

TEST_CASE("factorization reassembles and orders primes") {
  const auto& sieve = shared_sieve();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> dist(1, sieve.limit());
  for (int round = 0; round < 2000; ++round) {
    std::uint64_t n = dist(rng);
    auto f = sieve.factorize(n);
    std::uint64_t product = 1;
    std::uint64_t prev_prime = 0;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > prev_prime);
      CHECK(pp.exponent >= 1);
      prev_prime = pp.prime;
      for (std::uint32_t e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("pointwise function examples") {
  const auto& sieve = shared_sieve();
  CHECK(omega(sieve, 1) == 0);
  CHECK(omega(sieve, 12) == 2);
  CHECK(omega(sieve, 30) == 3);

  CHECK(mobius(sieve, 1) == 1);
  CHECK(mobius(sieve, 12) == 0);
  CHECK(mobius(sieve, 30) == -1);

  CHECK(delta(sieve, 7, 1) == 1);
  CHECK(delta(sieve, 1, 1) == 1);
  CHECK(delta(sieve, 3, 4) == 0);
  CHECK(delta(sieve, 3, 6) == 4);
  CHECK(delta(sieve, 2, 30) == 1);  // delta_2 = mu^2
  CHECK(delta(sieve, 1, 5) == 0);   // delta_1 = [n=1]

  CHECK(rho(sieve, 4, 1) == 1);
  CHECK(rho(sieve, 2, 6) == 4);
  CHECK(rho(sieve, 3, 4) == 3);

  CHECK(euler_phi(sieve, 1) == 1);
  CHECK(euler_phi(sieve, 10) == 4);
  CHECK(euler_phi(sieve, 12) == 4);

  CHECK(coprime_count(sieve, 10, 1) == 10);
  CHECK(coprime_count(sieve, 10, 4) == 5);
  CHECK(coprime_count(sieve, 3, 2) == 2);
  CHECK(coprime_count(sieve, 0, 7) == 0);

  CHECK(radical(sieve, 1) == 1);
  CHECK(radical(sieve, 12) == 6);
  CHECK(radical(sieve, 49) == 7);
}

TEST_CASE("range and domain errors") {
  const auto& sieve = shared_sieve();
  CHECK_THROWS_AS(omega(sieve, 0), RangeError);
  CHECK_THROWS_AS(omega(sieve, sieve.limit() + 1), RangeError);
  CHECK_THROWS_AS(sieve.factorize(0), RangeError);
  CHECK_THROWS_AS(coprime_count(sieve, 5, 0), RangeError);
  CHECK_THROWS_AS(delta(sieve, 0, 5), RangeError);
  CHECK_THROWS_AS(rho(sieve, 0, 5), RangeError);
}

TEST_CASE("rho and delta report overflow instead of wrapping") {
  const auto& sieve = shared_sieve();
  // 510510 = 2*3*5*7*11*13*17 has omega = 7; (10^6)^7 = 10^42 > 2^127.
  CHECK_THROWS_AS(rho(sieve, 1000000000000ULL, 510510), OverflowError);
  CHECK_THROWS_AS(delta(sieve, 1000000000000ULL, 510510), OverflowError);
}

TEST_CASE("multiplicativity on random coprime pairs") {
  const auto& sieve = shared_sieve();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, 770);
  int pairs = 0;
  while (pairs < 500) {
    std::uint64_t a = dist(rng);
    std::uint64_t b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++pairs;
    std::uint64_t ab = a * b;
    CHECK(omega(sieve, ab) == omega(sieve, a) + omega(sieve, b));
    CHECK(mobius(sieve, ab) == mobius(sieve, a) * mobius(sieve, b));
    CHECK(euler_phi(sieve, ab) == euler_phi(sieve, a) * euler_phi(sieve, b));
    for (std::uint64_t k = 1; k <= 4; ++k) {
      CHECK(delta(sieve, k, ab) == delta(sieve, k, a) * delta(sieve, k, b));
      CHECK(rho(sieve, k, ab) == rho(sieve, k, a) * rho(sieve, k, b));
    }
  }
}

TEST_CASE("square killing") {
  const auto& sieve = shared_sieve();
  for (std::uint64_t m = 2; m <= 40; ++m) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (m * m * n > sieve.limit()) break;
      CHECK(delta(sieve, 3, m * m * n) == 0);
      CHECK(omega(sieve, m * m * n) == omega(sieve, m * n));
    }
  }
}

TEST_CASE("divisor sums of delta_k give k^omega") {
  const auto& sieve = shared_sieve();
  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
      int128 sum = 0;
      for (std::uint64_t d : divisors(sieve.factorize(n))) {
        sum += delta(sieve, k, d);
      }
      CHECK(sum == rho(sieve, k, n));
    }
  }
}

TEST_CASE("coprime_count(n, n) equals euler_phi(n)") {
  const auto& sieve = shared_sieve();
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    CHECK(coprime_count(sieve, n, n) == euler_phi(sieve, n));
  }
}

TEST_CASE("coprime_count against a literal gcd loop") {
  const auto& sieve = shared_sieve();
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t x : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{17},
                            std::uint64_t{100}, std::uint64_t{12345}}) {
      std::uint64_t expected = 0;
      for (std::uint64_t m = 1; m <= x; ++m) {
        if (std::gcd(m, a) == 1) ++expected;
      }
      CHECK(coprime_count(sieve, x, a) == expected);
    }
  }
}

TEST_CASE("invert_summation worked examples") {
  std::vector<int128> ones(7, 1);  // f(1..6) = 1
  auto g = invert_summation(ones);
  CHECK(g[1] == 1);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(g[n] == 0);

  const auto& sieve = shared_sieve();
  std::vector<int128> two_pow(7, 0);
  std::vector<int128> three_pow(7, 0);
  for (std::uint64_t n = 1; n <= 6; ++n) {
    two_pow[n] = rho(sieve, 2, n);
    three_pow[n] = rho(sieve, 3, n);
  }
  auto mu2 = invert_summation(two_pow);
  CHECK(mu2 == std::vector<int128>{0, 1, 1, 1, 0, 1, 1});
  auto delta3 = invert_summation(three_pow);
  CHECK(delta3 == std::vector<int128>{0, 1, 2, 2, 0, 2, 4});
}

TEST_CASE("invert_summation round trip and convolution cross-check") {
  const auto& sieve = shared_sieve();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> small(-4, 9);
  constexpr std::size_t N = 300;

  // Random multiplicative f assembled from random prime-power values.
  std::vector<int128> f(N + 1, 0);
  f[1] = 1;
  std::vector<int128> prime_power_value(N + 1, 0);
  for (std::size_t n = 2; n <= N; ++n) prime_power_value[n] = small(rng);
  for (std::size_t n = 2; n <= N; ++n) {
    auto fac = sieve.factorize(n);
    int128 value = 1;
    for (const auto& pp : fac.factors) {
      std::uint64_t q = 1;
      for (std::uint32_t e = 0; e < pp.exponent; ++e) q *= pp.prime;
      value *= prime_power_value[q];
    }
    f[n] = value;
  }

  auto g = invert_summation(f);

  // f(n) = sum_{d|n} g(d)
  for (std::size_t n = 1; n <= N; ++n) {
    int128 sum = 0;
    for (std::uint64_t d : divisors(sieve.factorize(n))) sum += g[d];
    CHECK(sum == f[n]);
  }

  // g = mu * f
  for (std::size_t n = 1; n <= N; ++n) {
    int128 conv = 0;
    for (std::uint64_t d : divisors(sieve.factorize(n))) {
      conv += mobius(sieve, d) * f[n / d];
    }
    CHECK(conv == g[n]);
  }

  // Summation identity: sum_{n<=x} f(n) = sum_{n<=x} floor(x/n) g(n)
  for (std::size_t x : {std::size_t{1}, std::size_t{2}, std::size_t{17}, std::size_t{100}, N}) {
    int128 lhs = 0;
    int128 rhs = 0;
    for (std::size_t n = 1; n <= x; ++n) {
      lhs += f[n];
      rhs += static_cast<int128>(x / n) * g[n];
    }
    CHECK(lhs == rhs);
  }
}

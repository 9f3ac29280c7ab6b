#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>

#include "cpt/int128.hpp"
#include "cpt/sieve.hpp"

namespace cpt {

struct TupleCountQuery {
  std::uint64_t n = 1;  // product bound
  std::uint64_t k = 1;  // tuple length
};

struct OracleLimits {
  // Upper bound on enumeration nodes before the oracle refuses to
  // continue. Ground truth is desk-scale by design.
  std::uint64_t max_enumeration_nodes = 50'000'000;
};

// Ground-truth evaluators: exhaustive enumeration for the combinatorial
// counts and literal evaluation of the definitional sums A, B, C, E, F.
// Everything else in the project is judged against this class, so it
// shares no code with the summatory algorithms: its omega/square-free
// lookups are filled by factorizing every integer individually.
class Oracle {
 public:
  explicit Oracle(const FactorSieve& sieve, OracleLimits limits = {});
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  const FactorSieve& sieve() const { return sieve_; }

  // Ordered k-tuples of pairwise relatively prime positive integers with
  // product at most n, by depth-first search over increasing parts > 1.
  int128 count_pairwise_coprime_tuples(TupleCountQuery query,
                                       const std::atomic<bool>* cancel = nullptr) const;

  // Ordered k-tuples of pairwise relatively prime positive integers with
  // product exactly n, by recursive divisor assignment.
  int128 count_coprime_factorizations(std::uint64_t n, std::uint64_t k,
                                      const std::atomic<bool>* cancel = nullptr) const;

  // A_k(x) = sum_{n<=x} floor(x/n) (k-1)^omega(n)
  int128 eval_A_direct(std::uint64_t x, std::uint64_t k) const;
  // B_k(x): same sum restricted to n divisible by a square > 1
  int128 eval_B_direct(std::uint64_t x, std::uint64_t k) const;
  // C_k(x, m) = sum_{n<=x} floor(x/n) (k-1)^omega(mn)
  int128 eval_C_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const;
  // E_k(x, m): sum over n <= x coprime to m of floor(x/n) (k-1)^omega(n)
  int128 eval_E_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const;
  // F_k(x, m): sum over n <= x sharing a factor with m of floor(x/n) (k-1)^omega(mn)
  int128 eval_F_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const;

  // sum_{i<=x} k^omega(i) evaluated definitionally (per-integer
  // factorization), for judging the summatory algorithms.
  int128 sum_pow_omega_direct(std::uint64_t x, std::uint64_t k) const;

  unsigned omega_of(std::uint64_t n) const;
  bool squarefree(std::uint64_t n) const;

 private:
  const FactorSieve& sieve_;
  OracleLimits limits_;

  mutable std::mutex fill_mutex_;
  mutable std::atomic<std::uint64_t> table_watermark_{0};
  mutable std::vector<std::uint8_t> omega_;
  mutable std::vector<std::uint8_t> squarefree_;

  void ensure_tables(std::uint64_t upto) const;
};

}  // namespace cpt

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "cpt/int128.hpp"
#include "cpt/rational.hpp"
#include "cpt/sieve.hpp"

namespace cpt {

// Shared read-only tables derived from the sieve in one linear pass:
// omega, square-free flags, and per-k prefix sums of delta_k. Built
// lazily at full sieve size on first use, then immutable; safe to share
// across threads.
class SummatoryContext {
 public:
  explicit SummatoryContext(const FactorSieve& sieve) : sieve_(sieve) {}
  SummatoryContext(const SummatoryContext&) = delete;
  SummatoryContext& operator=(const SummatoryContext&) = delete;

  const FactorSieve& sieve() const { return sieve_; }

  std::span<const std::uint8_t> omega_table();
  std::span<const std::uint8_t> squarefree_table();
  // delta_prefix(k)[x] = Delta_k(x) = sum_{i<=x} delta_k(i)
  std::span<const std::int64_t> delta_prefix(std::uint64_t k);

  int mobius_from_tables(std::uint64_t n);

 private:
  const FactorSieve& sieve_;
  std::mutex mutex_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint8_t> squarefree_;
  std::map<std::uint64_t, std::vector<std::int64_t>> delta_prefix_by_k_;

  void build_base_tables_locked();
};

// T_k(n) = sum_{i<=n} k^omega(i): direct accumulation over the sieve.
int128 t_by_sieve(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k);

// T_k(n) = sum_{i<=n} floor(n/i) delta_k(i), the floor factor batched
// over blocks of constant quotient.
int128 t_by_floor_delta(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k);

// T_k(n) = sum_{i<=n} Delta_k(floor(n/i)), exploiting that floor(n/i)
// takes O(sqrt n) distinct values.
int128 t_by_delta_hyperbola(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k);

// T_k(n) = sum_{d^2<=n} mu(d) C_k(floor(n/d^2), d) with
// C_k(x, m) = sum_{j<=x} floor(x/j) (k-1)^omega(mj).
int128 t_by_mobius_squares(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k);

// Delta_k(x); Delta_2 = Q.
int128 delta_summatory(SummatoryContext& ctx, std::uint64_t x, std::uint64_t k);

// Number of square-free integers <= x.
int128 q_count(SummatoryContext& ctx, std::uint64_t x);

// D_k(x): ordered k-tuples with product <= x, no coprimality condition.
// D_1(x) = x, D_2 by the hyperbola method, k >= 3 by recursion.
int128 d_summatory(std::uint64_t x, std::uint64_t k);

// sum_{i<=n} 2^omega(i) = sum_{i^2<=n} mu(i) D_2(floor(n/i^2)).
int128 t2_by_d2(SummatoryContext& ctx, std::uint64_t n);

// sum_{i<=n} 2^omega(i) = 2n - 1 + 2 sum_{1<i^2<n} (phi(floor(n/i), i) - phi(i)).
int128 t2_by_phi(SummatoryContext& ctx, std::uint64_t n);

// A_k(x) = sum_{j<=x} floor(x/j) (k-1)^omega(j), over the derived tables.
int128 a_summatory(SummatoryContext& ctx, std::uint64_t x, std::uint64_t k);

// Exact-rational residual of the reciprocal weighted-sum main term.
struct ResidualReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  int128 t_value = 0;
  BigRational main_term;  // n * sum_{i<=n} delta_k(i)/i, lowest terms
  BigRational residual;   // t_value - main_term, lowest terms
  int128 delta_bound = 0; // Delta_k(n); |residual| < delta_bound
};

inline constexpr std::uint64_t kDefaultResidualBudget = 2000;

ResidualReport reciprocal_residual(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t budget = kDefaultResidualBudget);

// Incremental store of the scaled residual-bound comparands:
//   abs_residual(n) = |T_k(n)*L - n*S|   and   scaled_bound(n) = Delta_k(n)*L
// with L = lcm(1..n) and S = sum_{i<=n} delta_k(i)*L/i, so that
// |T_k(n) - n*sum delta_k(i)/i| < Delta_k(n) iff abs_residual(n) < scaled_bound(n).
// All values exact; no fraction reduction is performed.
class ResidualTable {
 public:
  ResidualTable(SummatoryContext& ctx, std::uint64_t k,
                std::uint64_t budget = kDefaultResidualBudget);
  ~ResidualTable();
  ResidualTable(const ResidualTable&) = delete;
  ResidualTable& operator=(const ResidualTable&) = delete;

  void build_to(std::uint64_t n);  // extends incrementally; throws past the budget
  const BigInt& abs_residual(std::uint64_t n) const;
  const BigInt& scaled_bound(std::uint64_t n) const;
  std::uint64_t built_to() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Exhaustive residual-bound check over 1..upto using a ResidualTable.
struct ResidualScanResult {
  bool holds = true;
  std::uint64_t first_violation = 0;
  double max_ratio = 0.0;  // largest |residual| / Delta_k(n) observed
};

ResidualScanResult residual_bound_scan(SummatoryContext& ctx, std::uint64_t upto,
                                       std::uint64_t k,
                                       std::uint64_t budget = kDefaultResidualBudget);

// One record of an error-term scan; exact is exact, the rest is labeled
// approximate (double precision).
struct ScanRow {
  std::uint64_t x = 0;
  int128 exact = 0;
  double main_term = 0.0;
  double residual = 0.0;
  double residual_normalized = 0.0;
};

// Grid of x values for scans.
std::vector<std::uint64_t> make_grid(std::uint64_t from, std::uint64_t to,
                                     std::uint64_t points, bool log_spacing);

// Q(x) against 6x/pi^2, normalized by sqrt(x).
std::vector<ScanRow> q_error_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid);

// Delta_k(x); main term 6x/pi^2 when k == 2, otherwise no main term is
// emitted (main_term = 0) and the exact value is normalized by sqrt(x).
std::vector<ScanRow> delta_growth_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid,
                                       std::uint64_t k);

// Reciprocal-sum residual rows: residual_normalized = residual / Delta_k(n),
// strictly inside (-1, 1).
std::vector<ScanRow> t_residual_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid,
                                     std::uint64_t k,
                                     std::uint64_t budget = kDefaultResidualBudget);

// CSV schema: x,exact,main_term,residual,residual_normalized
std::string scan_rows_to_csv(std::span<const ScanRow> rows);

// Result of running one registered T algorithm at one point.
struct SummatoryResult {
  std::string algorithm;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  int128 value = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct TAlgorithm {
  const char* name;
  int128 (*fn)(SummatoryContext&, std::uint64_t, std::uint64_t);
};

// The registered strategies, all required to agree exactly.
std::span<const TAlgorithm> t_algorithms();

}  // namespace cpt

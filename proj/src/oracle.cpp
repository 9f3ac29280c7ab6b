#include "cpt/oracle.hpp"

#include <array>
#include <numeric>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

namespace {

class PowByOmega {
 public:
  explicit PowByOmega(std::uint64_t base) {
    value_[0] = 1;
    valid_[0] = true;
    for (std::size_t w = 1; w < value_.size(); ++w) {
      int128 v;
      if (!valid_[w - 1] ||
          __builtin_mul_overflow(value_[w - 1], static_cast<int128>(base), &v)) {
        break;
      }
      value_[w] = v;
      valid_[w] = true;
    }
  }

  int128 operator[](unsigned w) const {
    if (w >= value_.size() || !valid_[w]) {
      throw OverflowError("(k-1)^omega exceeds the 128-bit accumulator");
    }
    return value_[w];
  }

 private:
  std::array<int128, 16> value_{};
  std::array<bool, 16> valid_{};
};

struct WorkBudget {
  std::uint64_t remaining;
  const std::atomic<bool>* cancel;

  void spend() {
    if (remaining == 0) {
      throw ResourceError("oracle enumeration exceeded the configured work budget");
    }
    --remaining;
    if ((remaining & 0xfffu) == 0 && cancel != nullptr &&
        cancel->load(std::memory_order_relaxed)) {
      throw ResourceError("oracle enumeration cancelled");
    }
  }
};

// Strictly increasing pairwise-coprime parts > 1 with product <= n;
// each set of m distinct parts occupies k slots in k(k-1)...(k-m+1)
// ordered ways, the remaining slots holding 1.
int128 count_tuples_dfs(std::uint64_t min_part, std::uint64_t cap, std::uint64_t parts_product,
                        std::uint64_t parts_used, std::uint64_t k, int128 orderings,
                        WorkBudget& budget) {
  int128 total = 0;
  for (std::uint64_t a = min_part; a <= cap; ++a) {
    budget.spend();
    if (std::gcd(a, parts_product) != 1) continue;
    int128 here = checked_mul(orderings, static_cast<int128>(k - parts_used));
    total = checked_add(total, here);
    if (parts_used + 1 < k && (a + 1) <= cap / a) {
      total = checked_add(total, count_tuples_dfs(a + 1, cap / a, parts_product * a,
                                                  parts_used + 1, k, here, budget));
    }
  }
  return total;
}

int128 count_factorizations_dfs(const FactorSieve& sieve, std::uint64_t remaining,
                                std::uint64_t slots, std::uint64_t used_product,
                                WorkBudget& budget) {
  if (slots == 0) return remaining == 1 ? 1 : 0;
  if (remaining == 1) return 1;  // all further slots hold 1
  int128 total = 0;
  for (std::uint64_t d : divisors(sieve.factorize(remaining))) {
    budget.spend();
    if (std::gcd(d, used_product) != 1) continue;
    total = checked_add(total, count_factorizations_dfs(sieve, remaining / d, slots - 1,
                                                        used_product * d, budget));
  }
  return total;
}

}  // namespace

Oracle::Oracle(const FactorSieve& sieve, OracleLimits limits) : sieve_(sieve), limits_(limits) {}

void Oracle::ensure_tables(std::uint64_t upto) const {
  if (upto == 0) return;
  sieve_.check_range(upto);
  if (table_watermark_.load(std::memory_order_acquire) >= upto) return;
  std::scoped_lock lock(fill_mutex_);
  std::uint64_t watermark = table_watermark_.load(std::memory_order_relaxed);
  if (watermark >= upto) return;
  if (omega_.empty()) {
    omega_.assign(sieve_.limit() + 1, 0);
    squarefree_.assign(sieve_.limit() + 1, 1);
  }
  for (std::uint64_t i = watermark + 1; i <= upto; ++i) {
    Factorization f = sieve_.factorize(i);
    omega_[i] = static_cast<std::uint8_t>(f.omega());
    squarefree_[i] = f.squarefree() ? 1 : 0;
  }
  table_watermark_.store(upto, std::memory_order_release);
}

unsigned Oracle::omega_of(std::uint64_t n) const {
  ensure_tables(n);
  return omega_[n];
}

bool Oracle::squarefree(std::uint64_t n) const {
  ensure_tables(n);
  return squarefree_[n] != 0;
}

int128 Oracle::count_pairwise_coprime_tuples(TupleCountQuery query,
                                             const std::atomic<bool>* cancel) const {
  if (query.n < 1 || query.k < 1) {
    throw RangeError("count_pairwise_coprime_tuples: need n >= 1 and k >= 1");
  }
  WorkBudget budget{limits_.max_enumeration_nodes, cancel};
  // The empty selection is the all-ones tuple.
  int128 total = 1;
  if (query.n >= 2) {
    total = checked_add(total, count_tuples_dfs(2, query.n, 1, 0, query.k, 1, budget));
  }
  return total;
}

int128 Oracle::count_coprime_factorizations(std::uint64_t n, std::uint64_t k,
                                            const std::atomic<bool>* cancel) const {
  if (n < 1 || k < 1) throw RangeError("count_coprime_factorizations: need n >= 1 and k >= 1");
  sieve_.check_range(n);
  WorkBudget budget{limits_.max_enumeration_nodes, cancel};
  return count_factorizations_dfs(sieve_, n, k, 1, budget);
}

int128 Oracle::eval_A_direct(std::uint64_t x, std::uint64_t k) const {
  if (k < 1) throw RangeError("eval_A_direct: k must be >= 1");
  if (x == 0) return 0;
  ensure_tables(x);
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / n), pw[omega_[n]]));
  }
  return acc;
}

int128 Oracle::eval_B_direct(std::uint64_t x, std::uint64_t k) const {
  if (k < 1) throw RangeError("eval_B_direct: k must be >= 1");
  if (x == 0) return 0;
  ensure_tables(x);
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (squarefree_[n]) continue;
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / n), pw[omega_[n]]));
  }
  return acc;
}

int128 Oracle::eval_C_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const {
  if (k < 1 || m < 1) throw RangeError("eval_C_direct: need m >= 1 and k >= 1");
  if (x == 0) return 0;
  sieve_.check_range(x);
  ensure_tables(m * x);
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / n), pw[omega_[m * n]]));
  }
  return acc;
}

namespace {

// shares[n] = 1 iff gcd(m, n) > 1, filled by marking multiples of each
// distinct prime of m.
void mark_shared_factor(const FactorSieve& sieve, std::uint64_t m, std::uint64_t x,
                        std::vector<std::uint8_t>& shares) {
  shares.assign(x + 1, 0);
  for (const auto& pp : sieve.factorize(m).factors) {
    for (std::uint64_t j = pp.prime; j <= x; j += pp.prime) shares[j] = 1;
  }
}

thread_local std::vector<std::uint8_t> shared_factor_scratch;

}  // namespace

int128 Oracle::eval_E_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const {
  if (k < 1 || m < 1) throw RangeError("eval_E_direct: need m >= 1 and k >= 1");
  if (x == 0) return 0;
  ensure_tables(x);
  auto& shares = shared_factor_scratch;
  mark_shared_factor(sieve_, m, x, shares);
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (shares[n]) continue;
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / n), pw[omega_[n]]));
  }
  return acc;
}

int128 Oracle::eval_F_direct(std::uint64_t x, std::uint64_t m, std::uint64_t k) const {
  if (k < 1 || m < 1) throw RangeError("eval_F_direct: need m >= 1 and k >= 1");
  if (x == 0) return 0;
  sieve_.check_range(x);
  ensure_tables(m * x);
  auto& shares = shared_factor_scratch;
  mark_shared_factor(sieve_, m, x, shares);
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (!shares[n]) continue;
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / n), pw[omega_[m * n]]));
  }
  return acc;
}

int128 Oracle::sum_pow_omega_direct(std::uint64_t x, std::uint64_t k) const {
  if (k < 1) throw RangeError("sum_pow_omega_direct: k must be >= 1");
  if (x == 0) return 0;
  ensure_tables(x);
  PowByOmega pw(k);
  int128 acc = 0;
  for (std::uint64_t i = 1; i <= x; ++i) {
    acc = checked_add(acc, pw[omega_[i]]);
  }
  return acc;
}

}  // namespace cpt

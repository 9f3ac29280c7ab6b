#include "cpt/summatory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <unordered_map>

#include "cpt/error.hpp"

namespace cpt {

namespace {

// base^w lookup for w = 0..15 (omega never exceeds 15 below 2^32).
// Entries past the first overflow are marked invalid and only fault if
// an actual omega value reaches them.
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
      throw OverflowError("k^omega exceeds the 128-bit accumulator");
    }
    return value_[w];
  }

 private:
  std::array<int128, 16> value_{};
  std::array<bool, 16> valid_{};
};

}  // namespace

void SummatoryContext::build_base_tables_locked() {
  if (!omega_.empty()) return;
  std::uint64_t limit = sieve_.limit();
  omega_.assign(limit + 1, 0);
  squarefree_.assign(limit + 1, 1);
  if (limit >= 1) {
    omega_[1] = 0;
    squarefree_[1] = 1;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    std::uint32_t p = sieve_.smallest_prime_factor(i);
    std::uint64_t j = i / p;
    bool p_new = (j % p) != 0;
    omega_[i] = static_cast<std::uint8_t>(omega_[j] + (p_new ? 1 : 0));
    squarefree_[i] = static_cast<std::uint8_t>(squarefree_[j] && p_new);
  }
}

std::span<const std::uint8_t> SummatoryContext::omega_table() {
  std::scoped_lock lock(mutex_);
  build_base_tables_locked();
  return omega_;
}

std::span<const std::uint8_t> SummatoryContext::squarefree_table() {
  std::scoped_lock lock(mutex_);
  build_base_tables_locked();
  return squarefree_;
}

std::span<const std::int64_t> SummatoryContext::delta_prefix(std::uint64_t k) {
  if (k < 1) throw RangeError("delta_prefix: k must be >= 1");
  std::scoped_lock lock(mutex_);
  build_base_tables_locked();
  auto it = delta_prefix_by_k_.find(k);
  if (it != delta_prefix_by_k_.end()) return it->second;
  std::uint64_t limit = sieve_.limit();
  PowByOmega pw(k - 1);
  std::vector<std::int64_t> prefix(limit + 1, 0);
  std::int64_t acc = 0;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    if (squarefree_[i]) {
      int128 dv = pw[omega_[i]];
      if (dv > static_cast<int128>(INT64_MAX) ||
          __builtin_add_overflow(acc, static_cast<std::int64_t>(dv), &acc)) {
        throw OverflowError("delta prefix sum exceeds 64 bits");
      }
    }
    prefix[i] = acc;
  }
  return delta_prefix_by_k_.emplace(k, std::move(prefix)).first->second;
}

int SummatoryContext::mobius_from_tables(std::uint64_t n) {
  sieve_.check_range(n);
  auto sq = squarefree_table();
  auto om = omega_table();
  if (!sq[n]) return 0;
  return om[n] % 2 == 0 ? 1 : -1;
}

int128 t_by_sieve(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k) {
  if (k < 1) throw RangeError("t_by_sieve: k must be >= 1");
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  auto om = ctx.omega_table();
  PowByOmega pw(k);
  int128 acc = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc = checked_add(acc, pw[om[i]]);
  }
  return acc;
}

int128 t_by_floor_delta(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k) {
  if (k < 1) throw RangeError("t_by_floor_delta: k must be >= 1");
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  auto prefix = ctx.delta_prefix(k);
  int128 acc = 0;
  for (std::uint64_t i = 1; i <= n;) {
    std::uint64_t q = n / i;
    std::uint64_t last = n / q;
    int128 block = static_cast<int128>(q) * (prefix[last] - prefix[i - 1]);
    acc = checked_add(acc, block);
    i = last + 1;
  }
  return acc;
}

int128 t_by_delta_hyperbola(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k) {
  if (k < 1) throw RangeError("t_by_delta_hyperbola: k must be >= 1");
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  auto prefix = ctx.delta_prefix(k);
  int128 acc = 0;
  for (std::uint64_t i = 1; i <= n;) {
    std::uint64_t q = n / i;
    std::uint64_t last = n / q;
    int128 block = static_cast<int128>(last - i + 1) * prefix[q];
    acc = checked_add(acc, block);
    i = last + 1;
  }
  return acc;
}

int128 t_by_mobius_squares(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k) {
  if (k < 1) throw RangeError("t_by_mobius_squares: k must be >= 1");
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  auto om = ctx.omega_table();
  auto sq = ctx.squarefree_table();
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (!sq[d]) continue;
    int mu = om[d] % 2 == 0 ? 1 : -1;
    std::uint64_t x = n / (d * d);
    int128 c = 0;
    for (std::uint64_t j = 1; j <= x; ++j) {
      c = checked_add(c, checked_mul(static_cast<int128>(x / j), pw[om[d * j]]));
    }
    acc = checked_add(acc, mu > 0 ? c : -c);
  }
  return acc;
}

int128 delta_summatory(SummatoryContext& ctx, std::uint64_t x, std::uint64_t k) {
  if (k < 1) throw RangeError("delta_summatory: k must be >= 1");
  if (x == 0) return 0;
  ctx.sieve().check_range(x);
  return ctx.delta_prefix(k)[x];
}

int128 q_count(SummatoryContext& ctx, std::uint64_t x) {
  return delta_summatory(ctx, x, 2);
}

namespace {

int128 d2_hyperbola(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = isqrt(x);
  int128 acc = 0;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = checked_add(acc, static_cast<int128>(x / i));
  }
  acc = checked_mul(acc, 2);
  return checked_sub(acc, checked_mul(static_cast<int128>(r), static_cast<int128>(r)));
}

int128 dk_recursive(std::uint64_t x, std::uint64_t k,
                    std::vector<std::unordered_map<std::uint64_t, int128>>& memo) {
  if (x == 0) return 0;
  if (k == 1) return static_cast<int128>(x);
  if (k == 2) return d2_hyperbola(x);
  auto& level = memo[k];
  auto it = level.find(x);
  if (it != level.end()) return it->second;
  int128 acc = 0;
  for (std::uint64_t d = 1; d <= x;) {
    std::uint64_t q = x / d;
    std::uint64_t last = x / q;
    acc = checked_add(acc, checked_mul(static_cast<int128>(last - d + 1),
                                       dk_recursive(q, k - 1, memo)));
    d = last + 1;
  }
  level.emplace(x, acc);
  return acc;
}

}  // namespace

int128 d_summatory(std::uint64_t x, std::uint64_t k) {
  if (k < 1) throw RangeError("d_summatory: k must be >= 1");
  if (k > 64) throw RangeError("d_summatory: k > 64 not supported");
  if (x == 0) return 0;
  if (k == 1) return static_cast<int128>(x);
  if (k == 2) return d2_hyperbola(x);
  std::vector<std::unordered_map<std::uint64_t, int128>> memo(k + 1);
  return dk_recursive(x, k, memo);
}

int128 t2_by_d2(SummatoryContext& ctx, std::uint64_t n) {
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  int128 acc = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    int mu = ctx.mobius_from_tables(i);
    if (mu == 0) continue;
    int128 term = d_summatory(n / (i * i), 2);
    acc = checked_add(acc, mu > 0 ? term : -term);
  }
  return acc;
}

int128 t2_by_phi(SummatoryContext& ctx, std::uint64_t n) {
  if (n == 0) return 0;
  ctx.sieve().check_range(n);
  int128 acc = 2 * static_cast<int128>(n) - 1;
  for (std::uint64_t i = 2; i * i < n; ++i) {
    std::uint64_t with_bound = coprime_count(ctx.sieve(), n / i, i);
    std::uint64_t phi_i = euler_phi(ctx.sieve(), i);
    acc = checked_add(acc, 2 * (static_cast<int128>(with_bound) - static_cast<int128>(phi_i)));
  }
  return acc;
}

int128 a_summatory(SummatoryContext& ctx, std::uint64_t x, std::uint64_t k) {
  if (k < 1) throw RangeError("a_summatory: k must be >= 1");
  if (x == 0) return 0;
  ctx.sieve().check_range(x);
  auto om = ctx.omega_table();
  PowByOmega pw(k - 1);
  int128 acc = 0;
  for (std::uint64_t j = 1; j <= x; ++j) {
    acc = checked_add(acc, checked_mul(static_cast<int128>(x / j), pw[om[j]]));
  }
  return acc;
}

namespace {

// Shared walk for the exact reciprocal-sum computations: maintains
// L = lcm(1..n) and S = sum_{i<=n} delta_k(i) * L / i, both exact.
// delta values must fit in uint32 (k is already budget-limited).
class ReciprocalWalker {
 public:
  ReciprocalWalker(SummatoryContext& ctx, std::uint64_t k)
      : sieve_(ctx.sieve()),
        omega_(ctx.omega_table()),
        squarefree_(ctx.squarefree_table()),
        delta_(k - 1),
        lcm_(1),
        weighted_sum_(0) {}

  // Advance from n-1 to n.
  void step(std::uint64_t n) {
    if (n > 1) {
      std::uint32_t p = sieve_.smallest_prime_factor(n);
      std::uint64_t rest = n;
      while (rest % p == 0) rest /= p;
      if (rest == 1) {
        // n is a prime power: lcm gains one factor of p, and every
        // accumulated term scales with it.
        lcm_.mul_small(p);
        weighted_sum_.mul_small(p);
      }
    }
    if (squarefree_[n]) {
      int128 dv = delta_[omega_[n]];
      if (dv != 0) {
        BigInt term = lcm_;
        term.div_exact_small(static_cast<std::uint32_t>(n));
        weighted_sum_ += term * BigInt::from_int128(dv);
      }
    }
  }

  const BigInt& lcm() const { return lcm_; }
  const BigInt& weighted_sum() const { return weighted_sum_; }

 private:
  const FactorSieve& sieve_;
  std::span<const std::uint8_t> omega_;
  std::span<const std::uint8_t> squarefree_;
  PowByOmega delta_;
  BigInt lcm_;
  BigInt weighted_sum_;
};

}  // namespace

ResidualReport reciprocal_residual(SummatoryContext& ctx, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t budget) {
  if (k < 1) throw RangeError("reciprocal_residual: k must be >= 1");
  if (n < 1) throw RangeError("reciprocal_residual: n must be >= 1");
  if (n > budget) {
    throw ResourceError("reciprocal_residual: n = " + std::to_string(n) +
                        " exceeds the exact-rational budget of " + std::to_string(budget));
  }
  ctx.sieve().check_range(n);
  if (n > UINT32_MAX) throw RangeError("reciprocal_residual: n too large");
  ReciprocalWalker walker(ctx, k);
  for (std::uint64_t i = 1; i <= n; ++i) walker.step(i);

  ResidualReport report;
  report.n = n;
  report.k = k;
  report.t_value = t_by_sieve(ctx, n, k);
  report.delta_bound = delta_summatory(ctx, n, k);

  BigInt scaled_main = walker.weighted_sum();
  scaled_main.mul_small(static_cast<std::uint32_t>(n));
  report.main_term = BigRational(scaled_main, walker.lcm());
  BigInt scaled_resid = BigInt::from_int128(report.t_value) * walker.lcm() - scaled_main;
  report.residual = BigRational(scaled_resid, walker.lcm());

  BigInt bound_scaled = walker.lcm() * BigInt::from_int128(report.delta_bound);
  if (!(scaled_resid.abs() < bound_scaled)) {
    throw std::logic_error("reciprocal_residual: residual bound violated");
  }
  return report;
}

struct ResidualTable::Impl {
  SummatoryContext& ctx;
  std::uint64_t k;
  std::uint64_t budget;
  std::uint64_t built = 0;
  ReciprocalWalker walker;
  PowByOmega pow_k;
  std::span<const std::uint8_t> omega;
  std::span<const std::int64_t> delta_prefix;
  int128 t_running = 0;
  std::vector<BigInt> abs_residual{BigInt(0)};  // index 0 unused
  std::vector<BigInt> scaled_bound{BigInt(0)};

  Impl(SummatoryContext& context, std::uint64_t order, std::uint64_t n_budget)
      : ctx(context),
        k(order),
        budget(n_budget),
        walker(context, order),
        pow_k(order),
        omega(context.omega_table()),
        delta_prefix(context.delta_prefix(order)) {}
};

ResidualTable::ResidualTable(SummatoryContext& ctx, std::uint64_t k, std::uint64_t budget) {
  if (k < 1) throw RangeError("ResidualTable: k must be >= 1");
  impl_ = std::make_unique<Impl>(ctx, k, budget);
}

ResidualTable::~ResidualTable() = default;

void ResidualTable::build_to(std::uint64_t n) {
  if (n > impl_->budget) {
    throw ResourceError("residual table: n = " + std::to_string(n) +
                        " exceeds the exact-rational budget of " + std::to_string(impl_->budget));
  }
  impl_->ctx.sieve().check_range(n);
  for (std::uint64_t i = impl_->built + 1; i <= n; ++i) {
    impl_->walker.step(i);
    impl_->t_running = checked_add(impl_->t_running, impl_->pow_k[impl_->omega[i]]);
    BigInt scaled_main = impl_->walker.weighted_sum();
    scaled_main.mul_small(static_cast<std::uint32_t>(i));
    BigInt scaled_resid =
        BigInt::from_int128(impl_->t_running) * impl_->walker.lcm() - scaled_main;
    impl_->abs_residual.push_back(scaled_resid.abs());
    impl_->scaled_bound.push_back(impl_->walker.lcm() *
                                  BigInt::from_int128(impl_->delta_prefix[i]));
  }
  impl_->built = std::max(impl_->built, n);
}

const BigInt& ResidualTable::abs_residual(std::uint64_t n) const {
  if (n < 1 || n > impl_->built) throw RangeError("residual table: index not built");
  return impl_->abs_residual[n];
}

const BigInt& ResidualTable::scaled_bound(std::uint64_t n) const {
  if (n < 1 || n > impl_->built) throw RangeError("residual table: index not built");
  return impl_->scaled_bound[n];
}

std::uint64_t ResidualTable::built_to() const { return impl_->built; }

ResidualScanResult residual_bound_scan(SummatoryContext& ctx, std::uint64_t upto,
                                       std::uint64_t k, std::uint64_t budget) {
  if (upto < 1) throw RangeError("residual_bound_scan: upto must be >= 1");
  ResidualTable table(ctx, k, budget);
  table.build_to(upto);
  ResidualScanResult result;
  for (std::uint64_t n = 1; n <= upto; ++n) {
    const BigInt& resid = table.abs_residual(n);
    const BigInt& bound = table.scaled_bound(n);
    double ratio = BigInt::ratio(resid, bound);
    if (ratio > result.max_ratio) result.max_ratio = ratio;
    if (!(resid < bound) && result.holds) {
      result.holds = false;
      result.first_violation = n;
    }
  }
  return result;
}

std::vector<std::uint64_t> make_grid(std::uint64_t from, std::uint64_t to,
                                     std::uint64_t points, bool log_spacing) {
  if (from < 1 || to < from) throw RangeError("grid: need 1 <= from <= to");
  if (points < 1) throw RangeError("grid: need at least one point");
  std::vector<std::uint64_t> grid;
  grid.reserve(points);
  for (std::uint64_t i = 0; i < points; ++i) {
    double t = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    double value = log_spacing
                       ? static_cast<double>(from) *
                             std::pow(static_cast<double>(to) / static_cast<double>(from), t)
                       : static_cast<double>(from) +
                             t * (static_cast<double>(to) - static_cast<double>(from));
    auto x = static_cast<std::uint64_t>(std::llround(value));
    x = std::max(from, std::min(to, x));
    if (grid.empty() || grid.back() != x) grid.push_back(x);
  }
  return grid;
}

std::vector<ScanRow> q_error_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid) {
  return delta_growth_scan(ctx, grid, 2);
}

std::vector<ScanRow> delta_growth_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid,
                                       std::uint64_t k) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (std::uint64_t x : grid) {
    ScanRow row;
    row.x = x;
    row.exact = delta_summatory(ctx, x, k);
    row.main_term =
        k == 2 ? 6.0 * static_cast<double>(x) / (std::numbers::pi * std::numbers::pi) : 0.0;
    row.residual = static_cast<double>(row.exact) - row.main_term;
    row.residual_normalized = row.residual / std::sqrt(static_cast<double>(x));
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScanRow> t_residual_scan(SummatoryContext& ctx, std::span<const std::uint64_t> grid,
                                     std::uint64_t k, std::uint64_t budget) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (std::uint64_t x : grid) {
    ResidualReport report = reciprocal_residual(ctx, x, k, budget);
    ScanRow row;
    row.x = x;
    row.exact = report.t_value;
    row.main_term = report.main_term.to_double();
    row.residual = report.residual.to_double();
    row.residual_normalized =
        report.delta_bound == 0
            ? 0.0
            : BigInt::ratio(report.residual.num(),
                            report.residual.den() * BigInt::from_int128(report.delta_bound));
    rows.push_back(row);
  }
  return rows;
}

std::string scan_rows_to_csv(std::span<const ScanRow> rows) {
  std::string out = "x,exact,main_term,residual,residual_normalized\n";
  char buf[128];
  for (const auto& row : rows) {
    out += std::to_string(row.x);
    out += ',';
    out += to_string(row.exact);
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g\n", row.main_term, row.residual,
                  row.residual_normalized);
    out += buf;
  }
  return out;
}

std::span<const TAlgorithm> t_algorithms() {
  static constexpr TAlgorithm kAlgorithms[] = {
      {"sieve", &t_by_sieve},
      {"floor-delta", &t_by_floor_delta},
      {"delta-hyperbola", &t_by_delta_hyperbola},
      {"mobius-squares", &t_by_mobius_squares},
  };
  return kAlgorithms;
}

}  // namespace cpt

#include "cpt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "cpt/error.hpp"

namespace cpt {

ResidualTable& HarnessContext::residual_table(std::uint64_t k) {
  std::scoped_lock lock(residual_mutex_);
  auto it = residual_tables_.find(k);
  if (it == residual_tables_.end()) {
    it = residual_tables_.emplace(k, std::make_unique<ResidualTable>(summatory_, k)).first;
  }
  return *it->second;
}

namespace {

std::uint64_t u(std::int64_t v) { return static_cast<std::uint64_t>(v); }

int128 pow_int128(std::uint64_t base, unsigned exp) {
  return checked_pow(static_cast<int128>(base), exp);
}

// --- evaluators ----------------------------------------------------------

int128 eval_rho_enumeration(HarnessContext& ctx, Params p) {
  return ctx.oracle().count_coprime_factorizations(u(p[0]), u(p[1]));
}

int128 eval_pow_omega(HarnessContext& ctx, Params p) {
  return rho(ctx.sieve(), u(p[1]), u(p[0]));
}

int128 eval_divisor_sum_delta(HarnessContext& ctx, Params p) {
  int128 acc = 0;
  for (std::uint64_t d : divisors(ctx.sieve().factorize(u(p[0])))) {
    acc = checked_add(acc, delta(ctx.sieve(), u(p[1]), d));
  }
  return acc;
}

int128 eval_divisor_sum_mu_squared(HarnessContext& ctx, Params p) {
  int128 acc = 0;
  for (std::uint64_t d : divisors(ctx.sieve().factorize(u(p[0])))) {
    int mu = mobius(ctx.sieve(), d);
    acc = checked_add(acc, mu * mu);
  }
  return acc;
}

int128 eval_two_pow_omega(HarnessContext& ctx, Params p) {
  return rho(ctx.sieve(), 2, u(p[0]));
}

int128 eval_t_sieve(HarnessContext& ctx, Params p) {
  return t_by_sieve(ctx.summatory(), u(p[0]), u(p[1]));
}

int128 eval_t_floor_delta(HarnessContext& ctx, Params p) {
  return t_by_floor_delta(ctx.summatory(), u(p[0]), u(p[1]));
}

int128 eval_t_delta_hyperbola(HarnessContext& ctx, Params p) {
  return t_by_delta_hyperbola(ctx.summatory(), u(p[0]), u(p[1]));
}

BigInt eval_scaled_abs_residual(HarnessContext& ctx, Params p) {
  ResidualTable& table = ctx.residual_table(u(p[1]));
  table.build_to(u(p[0]));
  return table.abs_residual(u(p[0]));
}

BigInt eval_scaled_delta_bound(HarnessContext& ctx, Params p) {
  ResidualTable& table = ctx.residual_table(u(p[1]));
  table.build_to(u(p[0]));
  return table.scaled_bound(u(p[0]));
}

int128 eval_C_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().eval_C_direct(u(p[0]), u(p[1]), u(p[2]));
}

int128 eval_pow_E_plus_F_direct(HarnessContext& ctx, Params p) {
  std::uint64_t x = u(p[0]), m = u(p[1]), k = u(p[2]);
  int128 scaled_e = checked_mul(pow_int128(k - 1, ctx.oracle().omega_of(m)),
                                ctx.oracle().eval_E_direct(x, m, k));
  return checked_add(scaled_e, ctx.oracle().eval_F_direct(x, m, k));
}

int128 eval_E_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().eval_E_direct(u(p[0]), u(p[1]), u(p[2]));
}

int128 eval_F_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().eval_F_direct(u(p[0]), u(p[1]), u(p[2]));
}

// sum_{d|m} mu(d) C_k(floor(x/d), d)
int128 mobius_C_at_divisor(HarnessContext& ctx, std::uint64_t x, std::uint64_t m,
                           std::uint64_t k) {
  int128 acc = 0;
  for (std::uint64_t d : divisors(ctx.sieve().factorize(m))) {
    int mu = mobius(ctx.sieve(), d);
    if (mu == 0) continue;
    int128 c = ctx.oracle().eval_C_direct(x / d, d, k);
    acc = mu > 0 ? checked_add(acc, c) : checked_sub(acc, c);
  }
  return acc;
}

// sum_{d|m} mu(d) C_k(floor(x/d), m)
int128 mobius_C_at_m(HarnessContext& ctx, std::uint64_t x, std::uint64_t m, std::uint64_t k) {
  int128 acc = 0;
  for (std::uint64_t d : divisors(ctx.sieve().factorize(m))) {
    int mu = mobius(ctx.sieve(), d);
    if (mu == 0) continue;
    int128 c = ctx.oracle().eval_C_direct(x / d, m, k);
    acc = mu > 0 ? checked_add(acc, c) : checked_sub(acc, c);
  }
  return acc;
}

int128 eval_lemE_rhs(HarnessContext& ctx, Params p) {
  std::uint64_t x = u(p[0]), m = u(p[1]), k = u(p[2]);
  return checked_sub(ctx.oracle().eval_A_direct(x, k), mobius_C_at_divisor(ctx, x, m, k));
}

int128 eval_lemF_rhs(HarnessContext& ctx, Params p) {
  return mobius_C_at_m(ctx, u(p[0]), u(p[1]), u(p[2]));
}

int128 eval_A_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().eval_A_direct(u(p[0]), u(p[1]));
}

// sum_{s<=x} mu(s) ((k-1)^omega(s) E_k(floor(x/s), s) + F_k(floor(x/s), s))
int128 mobius_EF_sum(HarnessContext& ctx, std::uint64_t x, std::uint64_t k) {
  int128 acc = 0;
  for (std::uint64_t s = 1; s <= x; ++s) {
    int mu = mobius(ctx.sieve(), s);
    if (mu == 0) continue;
    int128 term = checked_add(checked_mul(pow_int128(k - 1, ctx.oracle().omega_of(s)),
                                          ctx.oracle().eval_E_direct(x / s, s, k)),
                              ctx.oracle().eval_F_direct(x / s, s, k));
    acc = mu > 0 ? checked_add(acc, term) : checked_sub(acc, term);
  }
  return acc;
}

int128 eval_thmA_rhs(HarnessContext& ctx, Params p) {
  return mobius_EF_sum(ctx, u(p[0]), u(p[1]));
}

int128 eval_t_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().sum_pow_omega_direct(u(p[0]), u(p[1]));
}

int128 eval_thmT2_rhs(HarnessContext& ctx, Params p) {
  std::uint64_t x = u(p[0]), k = u(p[1]);
  int128 acc = mobius_EF_sum(ctx, x, k);
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    int mu = mobius(ctx.sieve(), d);
    if (mu == 0) continue;
    std::uint64_t y = x / (d * d);
    int128 term = checked_add(checked_mul(pow_int128(k - 1, ctx.oracle().omega_of(d)),
                                          ctx.oracle().eval_E_direct(y, d, k)),
                              ctx.oracle().eval_F_direct(y, d, k));
    acc = mu > 0 ? checked_sub(acc, term) : checked_add(acc, term);
  }
  return acc;
}

int128 eval_t_sieve_k2(HarnessContext& ctx, Params p) {
  return t_by_sieve(ctx.summatory(), u(p[0]), 2);
}

int128 eval_t2_by_d2(HarnessContext& ctx, Params p) {
  return t2_by_d2(ctx.summatory(), u(p[0]));
}

int128 eval_t2_by_phi(HarnessContext& ctx, Params p) {
  return t2_by_phi(ctx.summatory(), u(p[0]));
}

int128 eval_E_derived_rhs(HarnessContext& ctx, Params p) {
  return mobius_C_at_divisor(ctx, u(p[0]), u(p[1]), u(p[2]));
}

int128 eval_F_derived_rhs(HarnessContext& ctx, Params p) {
  std::uint64_t x = u(p[0]), m = u(p[1]), k = u(p[2]);
  return checked_sub(ctx.oracle().eval_C_direct(x, m, k), mobius_C_at_m(ctx, x, m, k));
}

// sum_{d^2<=x} mu(d) C_k(floor(x/d^2), d)
int128 eval_mobius_squares_C(HarnessContext& ctx, Params p) {
  std::uint64_t x = u(p[0]), k = u(p[1]);
  int128 acc = 0;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    int mu = mobius(ctx.sieve(), d);
    if (mu == 0) continue;
    int128 c = ctx.oracle().eval_C_direct(x / (d * d), d, k);
    acc = mu > 0 ? checked_add(acc, c) : checked_sub(acc, c);
  }
  return acc;
}

int128 eval_C_at_square_direct(HarnessContext& ctx, Params p) {
  std::uint64_t d = u(p[1]);
  return ctx.oracle().eval_C_direct(u(p[0]), d * d, u(p[2]));
}

int128 eval_C_at_base_direct(HarnessContext& ctx, Params p) {
  return ctx.oracle().eval_C_direct(u(p[0]), u(p[1]), u(p[2]));
}

// --- domain helpers ------------------------------------------------------

std::vector<ParamRange> apply_override(const std::vector<ParamRange>& params,
                                       const DomainOverride* override_ranges) {
  std::vector<ParamRange> out = params;
  if (override_ranges != nullptr) {
    for (auto& range : out) {
      auto it = override_ranges->find(range.name);
      if (it != override_ranges->end()) {
        range.lo = it->second.first;
        range.hi = it->second.second;
      }
    }
  }
  for (const auto& range : out) {
    if (range.lo < 1 || range.hi < range.lo) {
      throw RangeError("claim domain for '" + range.name + "' is empty or invalid");
    }
  }
  return out;
}

std::string point_to_string(const std::vector<ParamRange>& domain,
                            std::span<const std::int64_t> point, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i != 0) out += sep;
    out += domain[i].name;
    out += '=';
    out += std::to_string(point[i]);
  }
  return out;
}

}  // namespace

std::vector<IdentityClaim> builtin_registry() {
  std::vector<IdentityClaim> claims;
  claims.reserve(17);

  auto req_first = [](Params hi) { return u(hi[0]); };
  auto req_x_times_m = [](Params hi) { return u(hi[0]) * u(hi[1]); };

  claims.push_back({"rho-pow", ClaimSource::paper, ClaimRelation::equal,
                    "rho_k(n) = k^omega(n)",
                    {{"n", 1, 2000}, {"k", 1, 5}},
                    {"coprime-factorization-enumeration", eval_rho_enumeration},
                    {"pow-omega", eval_pow_omega},
                    {},
                    {},
                    req_first});

  claims.push_back({"delta-divsum", ClaimSource::paper, ClaimRelation::equal,
                    "sum_{d|n} delta_k(d) = k^omega(n)",
                    {{"n", 1, 100000}, {"k", 1, 6}},
                    {"divisor-sum-of-delta", eval_divisor_sum_delta},
                    {"pow-omega", eval_pow_omega},
                    {},
                    {},
                    req_first});

  claims.push_back({"mu2-omega", ClaimSource::paper, ClaimRelation::equal,
                    "sum_{d|n} mu^2(d) = 2^omega(n)",
                    {{"n", 1, 100000}},
                    {"divisor-sum-of-mu-squared", eval_divisor_sum_mu_squared},
                    {"pow-2-omega", eval_two_pow_omega},
                    {},
                    {},
                    req_first});

  claims.push_back({"T-floor", ClaimSource::paper, ClaimRelation::equal,
                    "T_k(n) = sum_{i<=n} floor(n/i) delta_k(i)",
                    {{"n", 1, 10000}, {"k", 1, 5}},
                    {"t-by-sieve", eval_t_sieve},
                    {"t-by-floor-delta", eval_t_floor_delta},
                    {},
                    {},
                    req_first});

  claims.push_back({"T-hyperbola", ClaimSource::paper, ClaimRelation::equal,
                    "T_k(n) = sum_{i<=n} Delta_k(floor(n/i))",
                    {{"n", 1, 10000}, {"k", 1, 5}},
                    {"t-by-sieve", eval_t_sieve},
                    {"t-by-delta-hyperbola", eval_t_delta_hyperbola},
                    {},
                    {},
                    req_first});

  claims.push_back({"T-recip-bound", ClaimSource::paper, ClaimRelation::abs_strictly_less,
                    "|T_k(n) - n sum_{i<=n} delta_k(i)/i| < Delta_k(n)",
                    {{"n", 1, 2000}, {"k", 1, 4}},
                    {},
                    {},
                    {"scaled-abs-residual", eval_scaled_abs_residual},
                    {"scaled-delta-bound", eval_scaled_delta_bound},
                    req_first});

  claims.push_back({"C-split", ClaimSource::paper, ClaimRelation::equal,
                    "C_k(x,m) = (k-1)^omega(m) E_k(x,m) + F_k(x,m)",
                    {{"x", 1, 2000}, {"m", 1, 50}, {"k", 1, 4}},
                    {"C-direct", eval_C_direct},
                    {"pow-E-plus-F-direct", eval_pow_E_plus_F_direct},
                    {},
                    {},
                    req_x_times_m});

  claims.push_back({"lemE-paper", ClaimSource::paper, ClaimRelation::equal,
                    "E_k(x,m) = A_k(x) - sum_{d|m} mu(d) C_k(floor(x/d), d)",
                    {{"x", 1, 200}, {"m", 1, 30}, {"k", 2, 4}},
                    {"E-direct", eval_E_direct},
                    {"A-minus-mobius-C-direct", eval_lemE_rhs},
                    {},
                    {},
                    req_x_times_m});

  claims.push_back({"lemF-paper", ClaimSource::paper, ClaimRelation::equal,
                    "F_k(x,m) = sum_{d|m} mu(d) C_k(floor(x/d), m)",
                    {{"x", 1, 200}, {"m", 1, 30}, {"k", 2, 4}},
                    {"F-direct", eval_F_direct},
                    {"mobius-C-at-m-direct", eval_lemF_rhs},
                    {},
                    {},
                    req_x_times_m});

  claims.push_back({"thmA-paper", ClaimSource::paper, ClaimRelation::equal,
                    "A_k(x) = sum_{s<=x} mu(s) ((k-1)^omega(s) E_k(floor(x/s), s) + "
                    "F_k(floor(x/s), s))",
                    {{"x", 1, 200}, {"k", 2, 4}},
                    {"A-direct", eval_A_direct},
                    {"mobius-EF-direct", eval_thmA_rhs},
                    {},
                    {},
                    req_first});

  claims.push_back({"thmT2-paper", ClaimSource::paper, ClaimRelation::equal,
                    "T_k(x) = sum_{s<=x} mu(s)((k-1)^omega(s) E_k(floor(x/s), s) + "
                    "F_k(floor(x/s), s)) - sum_{d<=x} mu(d)((k-1)^omega(d) "
                    "E_k(floor(x/d^2), d) + F_k(floor(x/d^2), d))",
                    {{"x", 1, 200}, {"k", 2, 4}},
                    {"t-direct-pow-omega", eval_t_direct},
                    {"mobius-EF-two-sums-direct", eval_thmT2_rhs},
                    {},
                    {},
                    req_first});

  claims.push_back({"T2-d2", ClaimSource::paper, ClaimRelation::equal,
                    "sum_{i<=n} 2^omega(i) = sum_{i^2<=n} mu(i) D_2(floor(n/i^2))",
                    {{"n", 1, 10000}},
                    {"t-by-sieve-k2", eval_t_sieve_k2},
                    {"mobius-D2", eval_t2_by_d2},
                    {},
                    {},
                    req_first});

  claims.push_back({"T2-phi", ClaimSource::paper, ClaimRelation::equal,
                    "sum_{i<=n} 2^omega(i) = 2n - 1 + 2 sum_{1<i^2<n} "
                    "(phi(floor(n/i), i) - phi(i))",
                    {{"n", 1, 10000}},
                    {"t-by-sieve-k2", eval_t_sieve_k2},
                    {"phi-pair-count", eval_t2_by_phi},
                    {},
                    {},
                    req_first});

  claims.push_back({"E-derived", ClaimSource::derived, ClaimRelation::equal,
                    "E_k(x,m) = sum_{d|m} mu(d) C_k(floor(x/d), d)",
                    {{"x", 1, 200}, {"m", 1, 30}, {"k", 1, 4}},
                    {"E-direct", eval_E_direct},
                    {"mobius-C-at-d-direct", eval_E_derived_rhs},
                    {},
                    {},
                    req_x_times_m});

  claims.push_back({"F-derived", ClaimSource::derived, ClaimRelation::equal,
                    "F_k(x,m) = C_k(x,m) - sum_{d|m} mu(d) C_k(floor(x/d), m)",
                    {{"x", 1, 200}, {"m", 1, 30}, {"k", 1, 4}},
                    {"F-direct", eval_F_direct},
                    {"C-minus-mobius-C-at-m-direct", eval_F_derived_rhs},
                    {},
                    {},
                    req_x_times_m});

  claims.push_back({"T-mobius-squares", ClaimSource::derived, ClaimRelation::equal,
                    "T_k(x) = sum_{d^2<=x} mu(d) C_k(floor(x/d^2), d)",
                    {{"x", 1, 2000}, {"k", 1, 4}},
                    {"t-direct-pow-omega", eval_t_direct},
                    {"mobius-squares-C-direct", eval_mobius_squares_C},
                    {},
                    {},
                    req_first});

  claims.push_back({"C-square-reduce", ClaimSource::paper, ClaimRelation::equal,
                    "C_k(x, d^2) = C_k(x, d)",
                    {{"x", 1, 500}, {"d", 1, 30}, {"k", 1, 4}},
                    {"C-direct-square-modulus", eval_C_at_square_direct},
                    {"C-direct-base-modulus", eval_C_at_base_direct},
                    {},
                    {},
                    [](Params hi) { return u(hi[0]) * u(hi[1]) * u(hi[1]); }});

  return claims;
}

const IdentityClaim* find_claim(std::span<const IdentityClaim> registry, std::string_view id) {
  for (const auto& claim : registry) {
    if (claim.id == id) return &claim;
  }
  return nullptr;
}

std::uint64_t required_sieve_limit(const IdentityClaim& claim,
                                   const DomainOverride* override_ranges) {
  std::vector<ParamRange> domain = apply_override(claim.params, override_ranges);
  std::vector<std::int64_t> his;
  his.reserve(domain.size());
  for (const auto& range : domain) his.push_back(range.hi);
  return std::max<std::uint64_t>(1, claim.sieve_requirement(his));
}

Verdict verify_claim(HarnessContext& ctx, const IdentityClaim& claim,
                     const DomainOverride* override_ranges) {
  Verdict verdict;
  verdict.claim_id = claim.id;
  verdict.source = claim.source;
  verdict.relation = claim.relation;
  verdict.domain = apply_override(claim.params, override_ranges);

  std::vector<std::int64_t> point;
  point.reserve(verdict.domain.size());
  for (const auto& range : verdict.domain) point.push_back(range.lo);

  bool done = verdict.domain.empty();
  verdict.outcome = ClaimOutcome::verified;
  while (!done) {
    ++verdict.checked;
    try {
      if (claim.relation == ClaimRelation::equal) {
        int128 lhs = claim.lhs.fn(ctx, point);
        int128 rhs = claim.rhs.fn(ctx, point);
        if (lhs != rhs) {
          verdict.outcome = ClaimOutcome::refuted;
          verdict.counterexample = Counterexample{point, to_string(lhs), to_string(rhs)};
          break;
        }
      } else {
        BigInt lhs = claim.big_lhs.fn(ctx, point);
        BigInt rhs = claim.big_rhs.fn(ctx, point);
        double ratio = BigInt::ratio(lhs, rhs);
        if (ratio > verdict.max_ratio) verdict.max_ratio = ratio;
        if (!(lhs < rhs)) {
          verdict.outcome = ClaimOutcome::refuted;
          verdict.counterexample =
              Counterexample{point, lhs.to_string(), rhs.to_string()};
          break;
        }
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("claim " + claim.id + " at (" +
                               point_to_string(verdict.domain, point, ", ") +
                               "): " + e.what());
    }
    // Odometer step, last parameter fastest: lexicographic order.
    std::size_t i = point.size();
    while (i-- > 0) {
      if (point[i] < verdict.domain[i].hi) {
        ++point[i];
        break;
      }
      point[i] = verdict.domain[i].lo;
      if (i == 0) done = true;
    }
  }
  return verdict;
}

RunReport run_all(HarnessContext& ctx, std::span<const IdentityClaim> claims, unsigned threads,
                  const DomainOverride* override_ranges) {
  std::vector<Verdict> verdicts(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= claims.size()) break;
      try {
        verdicts[i] = verify_claim(ctx, claims[i], override_ranges);
      } catch (const std::exception& e) {
        Verdict v;
        v.claim_id = claims[i].id;
        v.source = claims[i].source;
        v.relation = claims[i].relation;
        v.outcome = ClaimOutcome::error;
        v.error_message = e.what();
        verdicts[i] = v;
      }
    }
  };
  unsigned worker_count =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(claims.size())));
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(verdicts.begin(), verdicts.end(),
            [](const Verdict& a, const Verdict& b) { return a.claim_id < b.claim_id; });
  RunReport report;
  report.verdicts = std::move(verdicts);
  for (const auto& v : report.verdicts) {
    switch (v.outcome) {
      case ClaimOutcome::verified: ++report.verified; break;
      case ClaimOutcome::refuted: ++report.refuted; break;
      case ClaimOutcome::error: ++report.errors; break;
    }
  }
  return report;
}

std::string to_string(ClaimSource source) {
  return source == ClaimSource::paper ? "paper" : "derived";
}

std::string to_string(ClaimOutcome outcome) {
  switch (outcome) {
    case ClaimOutcome::verified: return "verified";
    case ClaimOutcome::refuted: return "refuted";
    case ClaimOutcome::error: return "error";
  }
  return "?";
}

std::string verdict_to_line(const Verdict& verdict) {
  std::string line = verdict.claim_id + " [" + to_string(verdict.source) + "] ";
  switch (verdict.outcome) {
    case ClaimOutcome::verified: line += "VERIFIED"; break;
    case ClaimOutcome::refuted: line += "REFUTED"; break;
    case ClaimOutcome::error: line += "ERROR"; break;
  }
  line += " checked=" + std::to_string(verdict.checked);
  if (verdict.relation == ClaimRelation::abs_strictly_less &&
      verdict.outcome != ClaimOutcome::error) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), " max_ratio=%.6g", verdict.max_ratio);
    line += buf;
  }
  if (verdict.counterexample) {
    line += " at (" + point_to_string(verdict.domain, verdict.counterexample->params, ", ") +
            "): lhs=" + verdict.counterexample->lhs + " rhs=" + verdict.counterexample->rhs;
  }
  if (verdict.outcome == ClaimOutcome::error) {
    line += " " + verdict.error_message;
  }
  return line;
}

std::string report_to_text(const RunReport& report) {
  std::string out;
  for (const auto& verdict : report.verdicts) {
    out += verdict_to_line(verdict);
    out += '\n';
  }
  out += "summary: claims=" + std::to_string(report.verdicts.size()) +
         " verified=" + std::to_string(report.verified) +
         " refuted=" + std::to_string(report.refuted) +
         " errors=" + std::to_string(report.errors) + "\n";
  return out;
}

std::string report_to_csv(const RunReport& report) {
  std::string out = "claim_id,source,outcome,checked,counterexample_params,lhs,rhs\n";
  for (const auto& verdict : report.verdicts) {
    out += verdict.claim_id + ',' + to_string(verdict.source) + ',' +
           to_string(verdict.outcome) + ',' + std::to_string(verdict.checked) + ',';
    if (verdict.counterexample) {
      out += point_to_string(verdict.domain, verdict.counterexample->params, ";") + ',' +
             verdict.counterexample->lhs + ',' + verdict.counterexample->rhs;
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

}  // namespace cpt

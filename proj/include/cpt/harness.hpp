#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpt/bigint.hpp"
#include "cpt/int128.hpp"
#include "cpt/oracle.hpp"
#include "cpt/sieve.hpp"
#include "cpt/summatory.hpp"

namespace cpt {

enum class ClaimSource { paper, derived };
enum class ClaimRelation {
  equal,              // lhs == rhs, exact integers
  abs_strictly_less,  // |lhs| < rhs, exact big integers
};
enum class ClaimOutcome { verified, refuted, error };

struct ParamRange {
  std::string name;
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

// Evaluation workspace shared by every claim: one sieve, plus the oracle
// and summatory contexts over it. Safe for concurrent claim runs.
class HarnessContext {
 public:
  explicit HarnessContext(const FactorSieve& sieve)
      : sieve_(sieve), oracle_(sieve), summatory_(sieve) {}

  const FactorSieve& sieve() const { return sieve_; }
  Oracle& oracle() { return oracle_; }
  SummatoryContext& summatory() { return summatory_; }
  ResidualTable& residual_table(std::uint64_t k);

 private:
  const FactorSieve& sieve_;
  Oracle oracle_;
  SummatoryContext summatory_;
  std::mutex residual_mutex_;
  std::map<std::uint64_t, std::unique_ptr<ResidualTable>> residual_tables_;
};

using Params = std::span<const std::int64_t>;

// Named so reports and tests can assert the two sides really are
// different code paths.
struct Evaluator {
  std::string name;
  std::function<int128(HarnessContext&, Params)> fn;
};

struct BigEvaluator {
  std::string name;
  std::function<BigInt(HarnessContext&, Params)> fn;
};

struct IdentityClaim {
  std::string id;
  ClaimSource source = ClaimSource::paper;
  ClaimRelation relation = ClaimRelation::equal;
  std::string statement;
  std::vector<ParamRange> params;
  Evaluator lhs, rhs;            // used when relation == equal
  BigEvaluator big_lhs, big_rhs; // used when relation == abs_strictly_less
  // Sieve capacity needed to evaluate at the given per-parameter upper
  // bounds (same order as params).
  std::function<std::uint64_t(Params)> sieve_requirement;
};

struct Counterexample {
  std::vector<std::int64_t> params;  // same order as the claim's params
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  std::string claim_id;
  ClaimSource source = ClaimSource::paper;
  ClaimRelation relation = ClaimRelation::equal;
  std::uint64_t checked = 0;
  ClaimOutcome outcome = ClaimOutcome::error;
  std::optional<Counterexample> counterexample;  // present iff refuted
  double max_ratio = 0.0;  // bound claims: largest |lhs|/rhs observed
  std::string error_message;
  std::vector<ParamRange> domain;  // the domain actually scanned
};

// name -> (lo, hi); parameters not mentioned keep their defaults.
using DomainOverride = std::map<std::string, std::pair<std::int64_t, std::int64_t>>;

// The registered claims, in registry order.
std::vector<IdentityClaim> builtin_registry();

const IdentityClaim* find_claim(std::span<const IdentityClaim> registry, std::string_view id);

std::uint64_t required_sieve_limit(const IdentityClaim& claim,
                                   const DomainOverride* override_ranges = nullptr);

// Evaluate both sides at every point of the (possibly overridden) domain
// in lexicographic order; stop at the first failing point. Evaluator
// errors propagate with the offending parameter point attached.
Verdict verify_claim(HarnessContext& ctx, const IdentityClaim& claim,
                     const DomainOverride* override_ranges = nullptr);

struct RunReport {
  std::vector<Verdict> verdicts;  // ordered by claim id
  std::uint64_t verified = 0;
  std::uint64_t refuted = 0;
  std::uint64_t errors = 0;
};

// Run every claim over its default domain, claims possibly in parallel;
// per-claim errors are aggregated, not thrown.
RunReport run_all(HarnessContext& ctx, std::span<const IdentityClaim> claims,
                  unsigned threads = 1, const DomainOverride* override_ranges = nullptr);

std::string to_string(ClaimSource source);
std::string to_string(ClaimOutcome outcome);
std::string verdict_to_line(const Verdict& verdict);
std::string report_to_text(const RunReport& report);
// CSV schema: claim_id,source,outcome,checked,counterexample_params,lhs,rhs
std::string report_to_csv(const RunReport& report);

}  // namespace cpt

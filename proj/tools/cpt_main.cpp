// cpt: exact arithmetic-function computations, identity verification,
// error-term scans, and algorithm benchmarks over one factorization sieve.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpt/error.hpp"
#include "cpt/harness.hpp"
#include "cpt/int128.hpp"
#include "cpt/oracle.hpp"
#include "cpt/sieve.hpp"
#include "cpt/summatory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitDisagreement = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisagreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t sieve_limit_cap = 10'000'000;
  std::string threads = "auto";
  std::string output = "-";
  std::string format = "table";
};

unsigned resolve_threads(const std::string& spec) {
  if (spec == "auto") {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  int value = std::stoi(spec);
  if (value < 1) throw UsageError("--threads must be >= 1 or 'auto'");
  return static_cast<unsigned>(value);
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

cpt::FactorSieve build_sieve_checked(std::uint64_t required, std::uint64_t cap) {
  std::uint64_t limit = std::max<std::uint64_t>(1, required);
  if (limit > cap) {
    throw cpt::CapacityError("command needs sieve limit " + std::to_string(limit) +
                             " but --sieve-limit caps it at " + std::to_string(cap));
  }
  return cpt::FactorSieve::build(limit);
}

std::uint64_t as_u64(std::int64_t v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

// --- compute ---------------------------------------------------------------

struct QuantitySpec {
  const char* name;
  int arity;
  const char* args_help;
};

constexpr QuantitySpec kQuantities[] = {
    {"T", 2, "n k"},     {"Delta", 2, "x k"}, {"Q", 1, "x"},      {"Dk", 2, "x k"},
    {"A", 2, "x k"},     {"B", 2, "x k"},     {"C", 3, "x m k"},  {"E", 3, "x m k"},
    {"F", 3, "x m k"},   {"rho", 2, "k n"},   {"delta", 2, "k n"}, {"omega", 1, "n"},
    {"mu", 1, "n"},      {"phi", 1, "n"},     {"phi2", 2, "x a"},
};

const QuantitySpec* find_quantity(const std::string& name) {
  for (const auto& q : kQuantities) {
    if (name == q.name) return &q;
  }
  return nullptr;
}

std::uint64_t compute_required_limit(const std::string& q, const std::vector<std::uint64_t>& a) {
  if (q == "T" || q == "Delta" || q == "Q" || q == "A" || q == "B") return a[0];
  if (q == "Dk") return 1;  // pure floor sums
  if (q == "C" || q == "F") return a[0] * a[1];
  if (q == "E") return std::max(a[0], a[1]);
  if (q == "rho" || q == "delta") return a[1];
  if (q == "omega" || q == "mu" || q == "phi") return a[0];
  if (q == "phi2") return a[1];
  return 1;
}

std::string join_args(const std::vector<std::uint64_t>& args, char sep) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(args[i]);
  }
  return out;
}

int cmd_compute(const GlobalOptions& global, const std::string& quantity,
                const std::vector<std::int64_t>& raw_args, bool all_algorithms) {
  const QuantitySpec* spec = find_quantity(quantity);
  if (spec == nullptr) throw UsageError("unknown quantity: " + quantity);
  if (static_cast<int>(raw_args.size()) != spec->arity) {
    throw UsageError("quantity " + quantity + " takes arguments: " +
                     std::string(spec->args_help));
  }
  std::vector<std::uint64_t> args;
  for (auto v : raw_args) args.push_back(as_u64(v, "argument"));

  cpt::FactorSieve sieve =
      build_sieve_checked(compute_required_limit(quantity, args), global.sieve_limit_cap);
  cpt::SummatoryContext summatory(sieve);
  cpt::Oracle oracle(sieve);
  OutputSink sink(global.output);
  std::ostream& out = sink.stream();

  if (all_algorithms) {
    if (quantity != "T") throw UsageError("--all-algorithms applies to quantity T only");
    std::vector<cpt::SummatoryResult> rows;
    for (const auto& algorithm : cpt::t_algorithms()) {
      auto start = std::chrono::steady_clock::now();
      cpt::int128 value = algorithm.fn(summatory, args[0], args[1]);
      auto elapsed = std::chrono::steady_clock::now() - start;
      rows.push_back({algorithm.name, args[0], args[1], value,
                      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)});
    }
    for (const auto& row : rows) {
      if (row.value != rows.front().value) {
        throw DisagreementError("algorithms disagree on T(" + std::to_string(args[0]) + ", " +
                                std::to_string(args[1]) + "): " + rows.front().algorithm + "=" +
                                cpt::to_string(rows.front().value) + " " + row.algorithm + "=" +
                                cpt::to_string(row.value));
      }
    }
    if (global.format == "csv") {
      out << "algorithm,n,k,value,elapsed_us\n";
      for (const auto& row : rows) {
        out << row.algorithm << ',' << row.n << ',' << row.k << ',' << cpt::to_string(row.value)
            << ',' << row.elapsed.count() / 1000 << '\n';
      }
    } else if (global.format == "json-lines") {
      for (const auto& row : rows) {
        nlohmann::json object = {{"quantity", "T"},
                                 {"algorithm", row.algorithm},
                                 {"n", row.n},
                                 {"k", row.k},
                                 {"value", cpt::to_string(row.value)},
                                 {"elapsed_us", row.elapsed.count() / 1000}};
        out << object.dump() << '\n';
      }
    } else {
      for (const auto& row : rows) {
        out << "T(" << row.n << ", " << row.k << ") = " << cpt::to_string(row.value)
            << "  [" << row.algorithm << ", " << row.elapsed.count() / 1000 << " us]\n";
      }
    }
    return kExitOk;
  }

  std::string value;
  if (quantity == "T") {
    value = cpt::to_string(cpt::t_by_sieve(summatory, args[0], args[1]));
  } else if (quantity == "Delta") {
    value = cpt::to_string(cpt::delta_summatory(summatory, args[0], args[1]));
  } else if (quantity == "Q") {
    value = cpt::to_string(cpt::q_count(summatory, args[0]));
  } else if (quantity == "Dk") {
    value = cpt::to_string(cpt::d_summatory(args[0], args[1]));
  } else if (quantity == "A") {
    value = cpt::to_string(cpt::a_summatory(summatory, args[0], args[1]));
  } else if (quantity == "B") {
    value = cpt::to_string(oracle.eval_B_direct(args[0], args[1]));
  } else if (quantity == "C") {
    value = cpt::to_string(oracle.eval_C_direct(args[0], args[1], args[2]));
  } else if (quantity == "E") {
    value = cpt::to_string(oracle.eval_E_direct(args[0], args[1], args[2]));
  } else if (quantity == "F") {
    value = cpt::to_string(oracle.eval_F_direct(args[0], args[1], args[2]));
  } else if (quantity == "rho") {
    value = cpt::to_string(cpt::rho(sieve, args[0], args[1]));
  } else if (quantity == "delta") {
    value = cpt::to_string(cpt::delta(sieve, args[0], args[1]));
  } else if (quantity == "omega") {
    value = std::to_string(cpt::omega(sieve, args[0]));
  } else if (quantity == "mu") {
    value = std::to_string(cpt::mobius(sieve, args[0]));
  } else if (quantity == "phi") {
    value = std::to_string(cpt::euler_phi(sieve, args[0]));
  } else if (quantity == "phi2") {
    value = std::to_string(cpt::coprime_count(sieve, args[0], args[1]));
  }

  if (global.format == "csv") {
    out << "quantity,args,value\n" << quantity << ',' << join_args(args, ';') << ',' << value
        << '\n';
  } else if (global.format == "json-lines") {
    nlohmann::json object = {{"quantity", quantity}, {"args", args}, {"value", value}};
    out << object.dump() << '\n';
  } else {
    out << quantity << '(' << join_args(args, ',') << ") = " << value << '\n';
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

cpt::DomainOverride parse_overrides(const std::vector<std::string>& specs) {
  cpt::DomainOverride overrides;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    auto colon = spec.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos) {
      throw UsageError("override must look like name=lo:hi, got: " + spec);
    }
    std::string name = spec.substr(0, eq);
    std::int64_t lo = std::stoll(spec.substr(eq + 1, colon - eq - 1));
    std::int64_t hi = std::stoll(spec.substr(colon + 1));
    overrides[name] = {lo, hi};
  }
  return overrides;
}

int cmd_verify(const GlobalOptions& global, const std::vector<std::string>& ids,
               const std::string& strict_spec, const std::vector<std::string>& override_specs) {
  std::vector<cpt::IdentityClaim> registry = cpt::builtin_registry();
  std::vector<cpt::IdentityClaim> selected;
  if (ids.size() == 1 && ids[0] == "all") {
    selected = registry;
  } else {
    for (const auto& id : ids) {
      const cpt::IdentityClaim* claim = cpt::find_claim(registry, id);
      if (claim == nullptr) throw UsageError("unknown claim id: " + id);
      selected.push_back(*claim);
    }
  }
  if (selected.empty()) throw UsageError("no claims selected");

  std::set<std::string> strict_ids;
  if (!strict_spec.empty()) {
    std::stringstream ss(strict_spec);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (cpt::find_claim(registry, id) == nullptr) {
        throw UsageError("unknown claim id in --strict: " + id);
      }
      strict_ids.insert(id);
    }
  }

  cpt::DomainOverride overrides = parse_overrides(override_specs);
  const cpt::DomainOverride* override_ptr = overrides.empty() ? nullptr : &overrides;

  std::uint64_t required = 1;
  for (const auto& claim : selected) {
    required = std::max(required, cpt::required_sieve_limit(claim, override_ptr));
  }
  cpt::FactorSieve sieve = build_sieve_checked(required, global.sieve_limit_cap);
  cpt::HarnessContext ctx(sieve);
  cpt::RunReport report =
      cpt::run_all(ctx, selected, resolve_threads(global.threads), override_ptr);

  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  if (global.format == "csv") {
    out << cpt::report_to_csv(report);
  } else if (global.format == "json-lines") {
    for (const auto& verdict : report.verdicts) {
      nlohmann::json object = {{"claim_id", verdict.claim_id},
                               {"source", cpt::to_string(verdict.source)},
                               {"outcome", cpt::to_string(verdict.outcome)},
                               {"checked", verdict.checked}};
      if (verdict.relation == cpt::ClaimRelation::abs_strictly_less) {
        object["max_ratio"] = verdict.max_ratio;
      }
      if (verdict.counterexample) {
        nlohmann::json cex;
        for (std::size_t i = 0; i < verdict.domain.size(); ++i) {
          cex[verdict.domain[i].name] = verdict.counterexample->params[i];
        }
        object["counterexample"] = cex;
        object["lhs"] = verdict.counterexample->lhs;
        object["rhs"] = verdict.counterexample->rhs;
      }
      if (!verdict.error_message.empty()) object["error"] = verdict.error_message;
      out << object.dump() << '\n';
    }
  } else {
    out << cpt::report_to_text(report);
  }

  for (const auto& verdict : report.verdicts) {
    if (verdict.outcome == cpt::ClaimOutcome::error) return kExitResource;
  }
  for (const auto& verdict : report.verdicts) {
    if (strict_ids.count(verdict.claim_id) != 0 &&
        verdict.outcome != cpt::ClaimOutcome::verified) {
      std::cerr << "strict claim refuted: " << verdict.claim_id << "\n";
      return kExitDisagreement;
    }
  }
  return kExitOk;
}

// --- scan --------------------------------------------------------------------

int cmd_scan(const GlobalOptions& global, const std::string& target, std::uint64_t from,
             std::uint64_t to, std::uint64_t points, const std::string& spacing,
             std::uint64_t k) {
  if (target != "q-error" && target != "delta-growth" && target != "t-residual") {
    throw UsageError("unknown scan target: " + target);
  }
  if (spacing != "linear" && spacing != "log") {
    throw UsageError("--spacing must be linear or log");
  }
  std::vector<std::uint64_t> grid = cpt::make_grid(from, to, points, spacing == "log");
  cpt::FactorSieve sieve = build_sieve_checked(to, global.sieve_limit_cap);
  cpt::SummatoryContext summatory(sieve);

  std::vector<cpt::ScanRow> rows;
  if (target == "q-error") {
    rows = cpt::q_error_scan(summatory, grid);
  } else if (target == "delta-growth") {
    rows = cpt::delta_growth_scan(summatory, grid, k);
  } else {
    rows = cpt::t_residual_scan(summatory, grid, k);
  }

  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  if (global.format == "json-lines") {
    for (const auto& row : rows) {
      nlohmann::json object = {{"x", row.x},
                               {"exact", cpt::to_string(row.exact)},
                               {"main_term", row.main_term},
                               {"residual", row.residual},
                               {"residual_normalized", row.residual_normalized}};
      out << object.dump() << '\n';
    }
  } else {
    // The scan's native output is its CSV schema.
    out << cpt::scan_rows_to_csv(rows);
  }
  return kExitOk;
}

// --- bench -------------------------------------------------------------------

int cmd_bench(const GlobalOptions& global, const std::string& quantity,
              std::vector<std::uint64_t> n_values, std::vector<std::uint64_t> k_values) {
  if (quantity != "T") throw UsageError("bench supports quantity T");
  if (n_values.empty() || k_values.empty()) throw UsageError("bench needs --n and --k");
  std::sort(n_values.begin(), n_values.end());
  std::sort(k_values.begin(), k_values.end());

  std::uint64_t max_n = n_values.back();
  cpt::FactorSieve sieve = build_sieve_checked(max_n, global.sieve_limit_cap);
  cpt::SummatoryContext summatory(sieve);
  // Warm the shared tables so per-algorithm timings measure the
  // algorithms, not one-time table construction.
  summatory.omega_table();
  for (std::uint64_t k : k_values) summatory.delta_prefix(k);

  std::vector<cpt::SummatoryResult> rows;
  for (std::uint64_t n : n_values) {
    for (const auto& algorithm : cpt::t_algorithms()) {
      for (std::uint64_t k : k_values) {
        auto start = std::chrono::steady_clock::now();
        cpt::int128 value = algorithm.fn(summatory, n, k);
        auto elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back({algorithm.name, n, k, value,
                        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)});
      }
    }
  }
  // All algorithms must agree exactly at every point.
  for (std::uint64_t n : n_values) {
    for (std::uint64_t k : k_values) {
      std::optional<cpt::int128> expected;
      for (const auto& row : rows) {
        if (row.n != n || row.k != k) continue;
        if (!expected) {
          expected = row.value;
        } else if (row.value != *expected) {
          throw DisagreementError("bench: algorithms disagree at T(" + std::to_string(n) +
                                  ", " + std::to_string(k) + ")");
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const cpt::SummatoryResult& a, const cpt::SummatoryResult& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
              return a.k < b.k;
            });

  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  if (global.format == "csv") {
    out << "n,k,algorithm,value,elapsed_us\n";
    for (const auto& row : rows) {
      out << row.n << ',' << row.k << ',' << row.algorithm << ',' << cpt::to_string(row.value)
          << ',' << row.elapsed.count() / 1000 << '\n';
    }
  } else if (global.format == "json-lines") {
    for (const auto& row : rows) {
      nlohmann::json object = {{"n", row.n},
                               {"k", row.k},
                               {"algorithm", row.algorithm},
                               {"value", cpt::to_string(row.value)},
                               {"elapsed_us", row.elapsed.count() / 1000}};
      out << object.dump() << '\n';
    }
  } else {
    out << "n k algorithm value elapsed_us\n";
    for (const auto& row : rows) {
      out << row.n << ' ' << row.k << ' ' << row.algorithm << ' ' << cpt::to_string(row.value)
          << ' ' << row.elapsed.count() / 1000 << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  if (const char* env = std::getenv("CPT_SIEVE_LIMIT")) {
    global.sieve_limit_cap = std::strtoull(env, nullptr, 10);
  }

  CLI::App app{"Exact pairwise-coprime tuple counting, identity verification, and scans"};
  app.require_subcommand(1);
  app.add_option("--sieve-limit", global.sieve_limit_cap,
                 "Largest sieve the process may build (env CPT_SIEVE_LIMIT)");
  app.add_option("--threads", global.threads, "Worker threads for verify, or 'auto'");
  app.add_option("--output", global.output, "Output path, '-' for stdout");
  app.add_option("--format", global.format, "table, csv, or json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines"}));

  auto* compute = app.add_subcommand("compute", "Compute one quantity exactly");
  std::string quantity;
  std::vector<std::int64_t> compute_args;
  bool all_algorithms = false;
  compute->add_option("quantity", quantity, "T Delta Q Dk A B C E F rho delta omega mu phi phi2")
      ->required();
  compute->add_option("args", compute_args, "Integer arguments for the quantity");
  compute->add_flag("--all-algorithms", all_algorithms,
                    "For T: one row per registered algorithm, with timing");

  auto* verify = app.add_subcommand("verify", "Verify registered identity claims");
  std::vector<std::string> claim_ids;
  std::string strict_spec;
  std::vector<std::string> override_specs;
  verify->add_option("ids", claim_ids, "Claim ids, or 'all'")->required();
  verify->add_option("--strict", strict_spec,
                     "Comma-separated ids whose refutation fails the run");
  verify->add_option("--override", override_specs,
                     "Domain override name=lo:hi (repeatable)");

  auto* scan = app.add_subcommand("scan", "Error-term scan to CSV");
  std::string target;
  std::uint64_t from = 10, to = 1'000'000, points = 25, scan_k = 2;
  std::string spacing = "log";
  scan->add_option("target", target, "q-error, delta-growth, or t-residual")->required();
  scan->add_option("--from", from, "Grid start (default 10)");
  scan->add_option("--to", to, "Grid end (default 1000000)");
  scan->add_option("--points", points, "Grid points (default 25)");
  scan->add_option("--spacing", spacing, "linear or log (default log)");
  scan->add_option("--k", scan_k, "Order k for delta-growth / t-residual");

  auto* bench = app.add_subcommand("bench", "Time the registered T algorithms");
  std::string bench_quantity;
  std::vector<std::uint64_t> bench_n, bench_k;
  bench->add_option("quantity", bench_quantity, "T")->required();
  bench->add_option("--n", bench_n, "Evaluation points")->delimiter(',')->required();
  bench->add_option("--k", bench_k, "Orders")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(global, quantity, compute_args, all_algorithms);
    }
    if (verify->parsed()) {
      return cmd_verify(global, claim_ids, strict_spec, override_specs);
    }
    if (scan->parsed()) {
      return cmd_scan(global, target, from, to, points, spacing, scan_k);
    }
    if (bench->parsed()) {
      return cmd_bench(global, bench_quantity, bench_n, bench_k);
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisagreementError& e) {
    std::cerr << "disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const cpt::RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitResource;
  } catch (const cpt::OverflowError& e) {
    std::cerr << "overflow error: " << e.what() << "\n";
    return kExitResource;
  } catch (const cpt::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitResource;
  } catch (const cpt::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(CPT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute worked examples") {
  auto r = run_cli("compute T 6 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "T(6,2) = 13"));

  r = run_cli("compute delta 3 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "delta(3,6) = 4"));

  r = run_cli("compute T 0 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "T(0,2) = 0"));

  r = run_cli("compute Q 1000000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Q(1000000) = 607926"));

  r = run_cli("compute phi2 10 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "phi2(10,4) = 5"));

  r = run_cli("compute C 3 2 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "C(3,2,3) = 12"));
}

TEST_CASE("compute output formats") {
  auto r = run_cli("--format csv compute T 6 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "quantity,args,value"));
  CHECK(contains(r.output, "T,6;2,13"));

  r = run_cli("--format json-lines compute T 6 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"quantity\":\"T\""));
  CHECK(contains(r.output, "\"value\":\"13\""));
}

TEST_CASE("compute --all-algorithms rows agree") {
  auto r = run_cli("--format csv compute T 5000 3 --all-algorithms");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "algorithm,n,k,value,elapsed_us"));
  // Same value on every row: count value occurrences.
  std::size_t rows = 0;
  std::size_t pos = 0;
  std::string value;
  while ((pos = r.output.find("\n", pos)) != std::string::npos) {
    ++pos;
    auto line_end = r.output.find('\n', pos);
    if (line_end == std::string::npos) break;
    std::string line = r.output.substr(pos, line_end - pos);
    auto first = line.find(',');
    if (first == std::string::npos) continue;
    ++rows;
    auto cols = line;
    // value is the 4th column
    std::size_t c = 0, start = 0;
    for (int i = 0; i < 3; ++i) {
      c = cols.find(',', start);
      start = c + 1;
    }
    auto end = cols.find(',', start);
    std::string v = cols.substr(start, end - start);
    if (value.empty()) value = v;
    CHECK(v == value);
  }
  CHECK(rows == 4);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("compute nosuch 5").exit_code == 2);
  CHECK(run_cli("compute T 1").exit_code == 2);          // wrong arity
  CHECK(run_cli("verify not-a-claim").exit_code == 2);
  CHECK(run_cli("scan nowhere").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("bench Delta --n 5 --k 2").exit_code == 2);
}

TEST_CASE("range and capacity errors exit 3") {
  CHECK(run_cli("compute omega 0").exit_code == 3);
  CHECK(run_cli("--sieve-limit 50 compute T 100 2").exit_code == 3);
  CHECK(run_cli("scan t-residual --k 3 --from 10 --to 5000 --points 4").exit_code == 3);
}

TEST_CASE("verify single claims") {
  auto r = run_cli("verify mu2-omega --override n=1:2000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "mu2-omega [paper] VERIFIED checked=2000"));

  r = run_cli("verify lemE-paper");
  CHECK(r.exit_code == 0);  // refutation is a result, not a failure
  CHECK(contains(r.output, "lemE-paper [paper] REFUTED"));
  CHECK(contains(r.output, "(x=1, m=1, k=2)"));
  CHECK(contains(r.output, "lhs=1 rhs=0"));

  r = run_cli("verify lemE-paper --strict lemE-paper");
  CHECK(r.exit_code == 4);

  r = run_cli("verify T-floor T2-d2 --strict T-floor,T2-d2 --override n=1:1500");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "T-floor [paper] VERIFIED"));
  CHECK(contains(r.output, "T2-d2 [paper] VERIFIED"));
}

TEST_CASE("verify csv format") {
  auto r = run_cli("--format csv verify lemF-paper mu2-omega --override n=1:50");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "claim_id,source,outcome,checked,counterexample_params,lhs,rhs"));
  CHECK(contains(r.output, "lemF-paper,paper,refuted,1,x=1;m=1;k=2,0,1"));
  CHECK(contains(r.output, "mu2-omega,paper,verified,50,,,"));
}

TEST_CASE("scan emits the CSV schema and is deterministic") {
  std::string args = "scan q-error --from 10 --to 100000 --points 6";
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(contains(first.output, "x,exact,main_term,residual,residual_normalized"));
  CHECK(contains(first.output, "\n10,7,"));

  auto dg = run_cli("scan delta-growth --k 2 --from 10 --to 100000 --points 6");
  CHECK(dg.exit_code == 0);
  CHECK(dg.output == first.output);  // Delta_2 = Q

  auto tr = run_cli("scan t-residual --k 3 --from 1 --to 300 --points 300 --spacing linear");
  CHECK(tr.exit_code == 0);
  // every normalized residual strictly below 1 in magnitude
  std::size_t pos = tr.output.find('\n');
  while (pos != std::string::npos && pos + 1 < tr.output.size()) {
    std::size_t line_end = tr.output.find('\n', pos + 1);
    if (line_end == std::string::npos) break;
    std::string line = tr.output.substr(pos + 1, line_end - pos - 1);
    auto last_comma = line.rfind(',');
    REQUIRE(last_comma != std::string::npos);
    double normalized = std::stod(line.substr(last_comma + 1));
    CHECK(std::abs(normalized) < 1.0);
    pos = line_end;
  }
}

TEST_CASE("bench agrees and exits 0") {
  auto r = run_cli("--format csv bench T --n 2000,10000 --k 2,3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "n,k,algorithm,value,elapsed_us"));
  std::size_t rows = 0;
  for (std::size_t pos = r.output.find('\n'); pos != std::string::npos;
       pos = r.output.find('\n', pos + 1)) {
    ++rows;
  }
  CHECK(rows == 1 + 2 * 4 * 2);  // header + |n| x algorithms x |k|
}

TEST_CASE("output file writing") {
  std::string path = "/tmp/cpt_cli_test_out.csv";
  std::remove(path.c_str());
  auto r = run_cli("--output " + path + " --format csv compute T 10 2");
  CHECK(r.exit_code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buffer[256] = {0};
  std::size_t got = fread(buffer, 1, sizeof(buffer) - 1, f);
  fclose(f);
  REQUIRE(got > 0);
  CHECK(contains(buffer, "T,10;2,"));
  std::remove(path.c_str());
}

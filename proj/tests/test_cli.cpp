#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qweyl/cli/suites.hpp"

using namespace qweyl;
using namespace qweyl::cli;
using oracle::Verdict;

namespace {

int run_cli(const std::string& args, const std::string& out = "/dev/null") {
  std::string cmd = std::string(QWEYL_CLI_PATH) + " " + args + " > " + out + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) { return "qweyl_test_" + name; }

oracle::OracleConfig quick() {
  oracle::OracleConfig c;
  c.orders = {5, 7};
  c.trials = 4;
  c.seed = 5;
  return c;
}

Expr random_expr(const SystemPtr& sys, std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth == 0 || pick(3) == 0) {
    Expr m = generator(sys, pick(sys->size()), pick(5) - 2) * qpower(sys, pick(5) - 2);
    return pick(4) == 0 ? (Rational(pick(7) - 3) / Rational(pick(3) + 1)) * m : m;
  }
  Expr a = random_expr(sys, rng, depth - 1), b = random_expr(sys, rng, depth - 1);
  switch (pick(4)) {
    case 0:
      return a + b;
    case 1:
      return a * b;
    case 2:
      return a - b;
    default:
      return inv(1 + a);
  }
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli("verify nosuch") == kUsage);
  CHECK(run_cli("") == kUsage);
  CHECK(run_cli("verify b2 --orders 5,x") == kUsage);
  CHECK(run_cli("verify b2 --orders 5,7,9 --trials 20 --seed 42") == kOk);
  CHECK(run_cli("verify qp6-zy --orders 5,7 --trials 3") == kUnequal);
  CHECK(run_cli("verify controls --orders 5,7 --trials 3") == kOk);
  CHECK(run_cli("act --group d5 --word s9 --on F") == kUsage);
  CHECK(run_cli("act --group d5 --word s2 --on \"F*(\"") == kUsage);
  CHECK(run_cli("evolve qp6 --steps 9 --mode symbolic") == kUsage);
}

TEST_CASE("exit code from verdicts") {
  SuiteReport r;
  weyl::RelationReport ok, control, pending;
  ok.verdict = Verdict::Equal;
  control.expect_equal = false;
  control.verdict = Verdict::Unequal;
  pending.verdict = Verdict::Inconclusive;
  r.relations = {ok, control};
  CHECK(exit_code(r) == kOk);
  r.relations.push_back(pending);
  CHECK(exit_code(r) == kInconclusive);
  ok.verdict = Verdict::Unequal;
  r.relations.push_back(ok);
  CHECK(exit_code(r) == kUnequal);
}

TEST_CASE("dilog suite from the command line") {
  std::string json = temp_path("dilog.json");
  CHECK(run_cli("verify dilog --qmax 8 --cmax 8 --out " + json) == kOk);
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["version"] == kReportVersion);
  CHECK(j["suite"] == "dilog");
  CHECK(j["config"]["qmax"] == 8);
  CHECK(j["elapsed_ms"] == 0);
  bool control_witness = false;
  for (const auto& rel : j["relations"]) {
    CHECK(rel["passed"] == true);
    if (rel["expect"] == "unequal") control_witness = control_witness || !rel["probes"][0]["witness"].is_null();
  }
  CHECK(control_witness);
  std::remove(json.c_str());
}

TEST_CASE("act examples") {
  CHECK(act_text("a2", "", "F0") == "F0");
  CHECK(act_text("d5", "t3", "a2") == "p*a2");
  auto d5 = weyl::d5_family();
  Expr got = d5.parse(act_text("d5", "s2", "F"));
  Expr want = d5.parse("F*(a0*a1^-1*G + a2^2)/(a0*a1^-1*a2^2*G + 1)");
  CHECK(oracle::randomized_equal(got, want, quick()).verdict == Verdict::Equal);
  CHECK(act_text("d5", "tau", "F") == "G");
  CHECK_THROWS(act_text("d5", "s2 s7", "F"));
  CHECK_THROWS(act_text("nope", "s1", "F"));
}

TEST_CASE("printed expressions parse back to equal ones") {
  auto fam = weyl::quantum_a_family(2);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Expr e = random_expr(fam.sys, rng, 3);
    for (PrintStyle style : {PrintStyle::Parenthesized, PrintStyle::Compact}) {
      std::string text = to_string(e, style);
      CAPTURE(text);
      Expr back = parse_expression(text, fam.sys);
      CHECK(oracle::randomized_equal(e, back, quick()).verdict != Verdict::Unequal);
      CHECK(to_string(back, style) == to_string(parse_expression(to_string(back, style), fam.sys), style));
    }
  }
}

TEST_CASE("config file then flags") {
  RunConfig cfg;
  apply_config_text("# defaults\norders = 5, 7\ntrials=3\nseed = 99\nqmax = 6\ntiming = yes\n", cfg);
  CHECK(cfg.oracle.orders == std::vector<int>{5, 7});
  CHECK(cfg.oracle.trials == 3);
  CHECK(cfg.oracle.seed == 99);
  CHECK(cfg.qmax == 6);
  CHECK(!cfg.cmax);
  CHECK(cfg.timing);
  CHECK_THROWS(apply_config_text("colour = red", cfg));
  CHECK_THROWS(apply_config_text("trials = many", cfg));
  CHECK_THROWS(parse_orders("1,5"));

  std::string path = temp_path("cfg.txt"), json = temp_path("b2.json");
  { std::ofstream(path) << "orders = 5\ntrials = 2\nseed = 3\n"; }
  CHECK(run_cli("verify b2 --config " + path + " --seed 8 --out " + json) == kOk);
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["config"]["orders"] == std::vector<int>{5});
  CHECK(j["config"]["trials"] == 2);
  CHECK(j["config"]["seed"] == 8);
  std::remove(path.c_str());
  std::remove(json.c_str());
}

TEST_CASE("reports are reproducible") {
  RunConfig cfg;
  cfg.oracle = quick();
  SuiteReport a = run_suite("d5-diagram", cfg), b = run_suite("d5-diagram", cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a)["elapsed_ms"] == 0);
  for (const auto& rel : to_json(a)["relations"]) {
    CHECK(rel.contains("id"));
    CHECK(rel.contains("lhs"));
    CHECK(rel.contains("rhs"));
    for (const auto& p : rel["probes"]) {
      CHECK(p.contains("probe"));
      CHECK(p.contains("verdict"));
      CHECK(p.contains("witness"));
    }
  }
  CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
  CHECK(is_suite("all"));
}

TEST_CASE("evolve from the command line") {
  std::string path = temp_path("qp3.jsonl");
  CHECK(run_cli("evolve qp3 --steps 10 --mode numeric --order 5 --seed 3", path) == kOk);
  std::istringstream lines(slurp(path));
  std::string line, c0;
  int n = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["step"] == n);
    std::string c = j["invariants"]["c"]["value"].dump();
    if (n == 0) c0 = c;
    CHECK(c == c0);
    ++n;
  }
  CHECK(n == 11);
  CHECK(run_cli("evolve qp6 --steps 2 --mode symbolic", path) == kOk);
  std::string text = slurp(path);
  CHECK(text.find("step 2") != std::string::npos);
  std::remove(path.c_str());
}

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qweyl/cli/suites.hpp"
#include "qweyl/painleve/evolve.hpp"
#include "qweyl/painleve/flows.hpp"
#include "qweyl/painleve/limits.hpp"

using namespace qweyl;
using oracle::OracleConfig;
using oracle::Verdict;
using weyl::RelationReport;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> lines;
  std::vector<std::string> observations;
};

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::string line(const RelationReport& r) {
  std::string s = std::string(r.passed() ? "ok   " : "FAIL ") + r.id + " (" + oracle::to_string(r.verdict);
  if (!r.expect_equal) s += ", expected unequal";
  for (const auto& p : r.probes)
    if (p.witness && p.verdict == Verdict::Unequal) {
      s += ", witness N=" + std::to_string(p.witness->order) + " p=" + std::to_string(p.witness->prime) +
           " seed=" + std::to_string(p.witness->seed);
      break;
    }
  return s + ")";
}

// graded relations must all pass; everything else is printed as an observation
void grade(Outcome& o, const std::vector<RelationReport>& rs, const std::function<bool(const std::string&)>& graded) {
  std::size_t n = 0, passed = 0;
  for (const auto& r : rs) {
    if (!graded(r.id)) {
      o.observations.push_back(line(r));
      continue;
    }
    ++n;
    passed += r.passed();
    if (!r.passed()) {
      o.ok = false;
      o.lines.push_back(line(r));
    }
  }
  o.lines.insert(o.lines.begin(), std::to_string(passed) + "/" + std::to_string(n) + " relations as expected");
}

bool all(const std::string&) { return true; }

std::vector<RelationReport> cat(std::initializer_list<std::vector<RelationReport>> parts) {
  std::vector<RelationReport> r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

OracleConfig matrix_config() {
  OracleConfig c;
  c.orders = {5, 7, 9, 11};
  c.trials = 20;
  c.seed = 20240501;
  return c;
}

Outcome classical() {
  OracleConfig c = matrix_config();
  c.trials = 100;
  Outcome o;
  grade(o, cat({weyl::a_classical_suite(2, c), weyl::a_classical_suite(3, c)}), all);
  return o;
}

Outcome quantum_a() {
  OracleConfig c = matrix_config();
  Outcome o;
  auto rs = cat({weyl::a_quantum_suite(2, c), weyl::a_quantum_suite(3, c), weyl::a_quantum_suite(4, c)});
  grade(o, rs, all);
  for (const auto& r : rs)
    for (const auto& p : r.probes)
      if (p.verdict == Verdict::Inconclusive) o.ok = false;
  return o;
}

Outcome rank2() {
  Outcome o;
  grade(o, cat({weyl::rank2_suite(weyl::Family::B2, matrix_config()), weyl::rank2_suite(weyl::Family::G2, matrix_config())}),
        all);
  return o;
}

Outcome series_identities() {
  Outcome o;
  std::vector<series::NamedIdentity> ids = {series::pentagon_identity(8, 8),
                                            series::dilog_identity(8, 8),
                                            series::pseudoconstant_identity(6, 6),
                                            series::b2_identity(4, 4),
                                            series::g2_identity(4, 4),
                                            series::pentagon_swapped_control(),
                                            series::dilog_swapped_control(),
                                            series::b2_swapped_control(),
                                            series::one_step_ratio_wrong_shift_control()};
  std::vector<RelationReport> rs;
  for (const auto& id : ids) {
    nlohmann::ordered_json w;
    rs.push_back(cli::identity_relation(id, series::verify_identity(id.sys, id.lhs, id.rhs, id.params), w));
  }
  grade(o, rs, all);
  return o;
}

Outcome d5() {
  Outcome o;
  grade(o, cat({weyl::d5_coxeter_suite(matrix_config()), weyl::d5_diagram_suite(matrix_config())}), all);
  return o;
}

Outcome qp6() {
  OracleConfig c = matrix_config();
  Outcome o;
  auto rs = cat({painleve::qp6_suite(c), painleve::qp6_zy_form_check(c), painleve::qp6_symmetry_check(c)});
  grade(o, rs, [](const std::string& id) { return !ends_with(id, "-corrected") && id != "qp6-symmetry:tau-inverts-T3"; });
  return o;
}

Outcome qp3() {
  OracleConfig c = matrix_config();
  Outcome o;
  grade(o, painleve::qp3_suite(c), [](const std::string& id) {
    return id == "qp3:invariant-table" || id == "qp3:implicit-relations" || id == "qp3:commutes(s0s1s0)" ||
           id == "qp3:commutes(s2)" || id == "qp3:T1T2=T2T1";
  });
  return o;
}

Outcome limits() {
  Outcome o;
  grade(o, cat({painleve::classical_limit_check(2, matrix_config()), painleve::classical_limit_check(3, matrix_config())}),
        all);
  for (int l : {2, 3}) {
    auto sys = weyl::quantum_a_system(l);
    for (int i = 0; i <= l; ++i) {
      int j = (i + 1) % (l + 1);
      painleve::CommutatorLimit lim = painleve::commutator_limit(*sys, i, j);
      if (lim.leading != -1) {
        o.ok = false;
        o.lines.push_back("FAIL leading coefficient of [F" + std::to_string(i) + ", F" + std::to_string(j) + "]");
      }
    }
  }
  return o;
}

void conservation(Outcome& o, const painleve::Trajectory& t, const std::string& label, bool graded) {
  int bad = -1;
  for (const auto& st : t.steps)
    for (const auto& v : st.invariants)
      if (v.label == label && !v.ok && bad < 0) bad = st.step;
  std::string s = t.flow + " " + label + " over " + std::to_string(t.steps.size() - 1) + " steps at N=" +
                  std::to_string(t.order) + ": ";
  s += bad < 0 ? "exact at every step" : "first mismatch at step " + std::to_string(bad);
  if (graded) {
    o.ok = o.ok && bad < 0;
    o.lines.push_back(std::string(bad < 0 ? "ok   " : "FAIL ") + s);
  } else {
    o.observations.push_back(std::string(bad < 0 ? "ok   " : "FAIL ") + s);
  }
}

Outcome trajectories() {
  Outcome o;
  auto t6 = painleve::evolve_numeric(painleve::qp6_flow(), 50, 7, 1);
  conservation(o, t6, "t", true);
  conservation(o, t6, "p", true);
  conservation(o, t6, "t-corrected", false);
  auto t3 = painleve::evolve_numeric(painleve::qp3_flow(), 50, 7, 3);
  conservation(o, t3, "c", true);
  conservation(o, t3, "p", true);
  return o;
}

Outcome controls() {
  Outcome o;
  auto rs = painleve::falsification_controls(matrix_config());
  grade(o, rs, all);
  std::size_t witnessed = 0;
  for (const auto& r : rs) {
    bool w = false;
    for (const auto& p : r.probes) w = w || (p.witness && p.verdict == Verdict::Unequal);
    witnessed += r.passed() && w;
  }
  if (witnessed < 3) o.ok = false;
  o.lines.push_back(std::to_string(witnessed) + " controls unequal with a recorded witness");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "classical A2, A3 Coxeter relations, 100 commutative trials", 5, classical},
      {2, "quantum A2..A4 Coxeter relations, orders 5,7,9,11 x 20 trials", 60, quantum_a},
      {3, "B2 and G2 relations on F1, F2, a1, a2", 30, rank2},
      {4, "product identities in truncated series, controls fail", 120, series_identities},
      {5, "D5 Coxeter relations, diagram involutions, well-definedness, sigma permutation", 60, d5},
      {6, "qPVI closed forms, a-row, t scaling, ZY form, symmetries, decompositions", 90, qp6},
      {7, "qPIII a-row, implicit relations, commutation, T1T2 = T2T1", 30, qp3},
      {8, "q = 1 limit of the quantum tables and Poisson leading terms", 10, limits},
      {9, "numeric trajectories: qPVI t scaling and qPIII conservation", 30, trajectories},
      {10, "falsification controls are unequal with witnesses", 60, controls},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && secs < c.limit_s;
    passed += ok;
    std::printf("[%s] %d. %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.title, secs, c.limit_s);
    for (const auto& l : o.lines) std::printf("      %s\n", l.c_str());
    if (!o.ok && !o.observations.empty()) {
      std::printf("      observed instead:\n");
      for (const auto& l : o.observations) std::printf("        %s\n", l.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}

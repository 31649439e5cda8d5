#include "doctest.h"
#include "json.hpp"
#include "qweyl/painleve/evolve.hpp"
#include "qweyl/painleve/limits.hpp"

using namespace qweyl;
using namespace qweyl::weyl;
using namespace qweyl::painleve;

namespace {

OracleConfig quick() {
  OracleConfig c;
  c.orders = {5, 7};
  c.trials = 4;
  c.seed = 31;
  return c;
}

const RelationReport& find(const std::vector<RelationReport>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  FAIL("no relation " << id);
  return rs.front();
}

bool equal(const Expr& a, const Expr& b) {
  return oracle::randomized_equal(a, b, quick()).verdict == Verdict::Equal;
}

}  // namespace

TEST_CASE("translation words") {
  auto a2 = quantum_a_family(2);
  CHECK(translation_word(a2, 1).names == std::vector<std::string>{"s1", "s2", "w^-1"});
  auto a3 = quantum_a_family(3);
  CHECK(translation_word(a3, 2).names == std::vector<std::string>{"s2", "s3", "w^-1", "s1"});
  CHECK(translation_word(a3, 3).names == std::vector<std::string>{"s3", "w^-1", "s1", "s2"});
  CHECK_THROWS(translation_word(a3, 4));
  CHECK_THROWS(translation_word(d5_family(), 1));
}

TEST_CASE("qPIII flow") {
  auto rs = qp3_suite(quick());
  CHECK(find(rs, "qp3:invariant-table").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:inverse").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:commutes(s0s1s0)").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:commutes(s2)").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:T1T2=T2T1").verdict == Verdict::Equal);
  // the relations as printed disagree with the word; the recomputed ones agree
  CHECK(find(rs, "qp3:implicit-relations").verdict == Verdict::Unequal);
  CHECK(find(rs, "qp3:implicit-relations-corrected").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:closed-form-corrected").verdict == Verdict::Equal);
  CHECK(find(rs, "qp3:inverse-closed-form-corrected").verdict == Verdict::Equal);
  auto s = qp3_flow();
  CHECK(equal(apply_word(s.word, s.family.parse("a2")), s.family.parse("a2")));
}

TEST_CASE("qPVI flow") {
  auto rs = qp6_suite(quick());
  CHECK(find(rs, "qp6:closed-form").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6:inverse-closed-form").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6:decomposition").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6:inverse").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6:invariant-table-corrected").verdict == Verdict::Equal);
  const auto& table = find(rs, "qp6:invariant-table");
  for (const auto& p : table.probes) {
    CAPTURE(p.probe);
    CHECK(p.verdict == (p.probe == "a3^2*a4*a5" ? Verdict::Unequal : Verdict::Equal));
  }
  auto s = qp6_flow();
  CHECK(equal(apply_word(s.word, s.family.parse("a4")), s.family.parse("a4")));
}

TEST_CASE("ZY form") {
  auto rs = qp6_zy_form_check(quick());
  CHECK(find(rs, "qp6-zy:ZY=qYZ").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6-zy:Tbar-corrected").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6-zy:ZbarZ-corrected").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6-zy:YbarY-corrected").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6-zy:Tbar").verdict == Verdict::Unequal);
  CHECK(find(rs, "qp6-zy:ZbarZ").verdict == Verdict::Unequal);
  CHECK(find(rs, "qp6-zy:YbarY").verdict == Verdict::Unequal);
}

TEST_CASE("qPVI symmetry") {
  auto rs = qp6_symmetry_check(quick());
  for (const char* g : {"s0", "s1", "s2 s3 s2", "s4", "s5", "sigma01"}) {
    CAPTURE(g);
    CHECK(find(rs, std::string("qp6-symmetry:commutes(") + g + ")").verdict == Verdict::Equal);
  }
  CHECK(find(rs, "qp6-symmetry:s2s3s2=s3s2s3").verdict == Verdict::Equal);
  CHECK(find(rs, "qp6-symmetry:commutes(tau)").verdict == Verdict::Unequal);
  CHECK(find(rs, "qp6-symmetry:tau-inverts-T3").verdict == Verdict::Equal);
}

TEST_CASE("falsification controls fail with witnesses") {
  auto rs = falsification_controls(quick());
  CHECK(rs.size() >= 3);
  for (const auto& r : rs) {
    CAPTURE(r.id);
    CHECK(r.verdict == Verdict::Unequal);
    CHECK(r.passed());
    bool witnessed = false;
    for (const auto& p : r.probes) witnessed = witnessed || p.witness.has_value();
    CHECK(witnessed);
  }
}

TEST_CASE("numeric trajectories") {
  auto qp3 = evolve_numeric(qp3_flow(), 50, 5, 3);
  REQUIRE(qp3.steps.size() == 51);
  CHECK(qp3.conserved());
  auto qp6 = evolve_numeric(qp6_flow(), 50, 7, 1);
  REQUIRE(qp6.steps.size() == 51);
  for (const auto& st : qp6.steps)
    for (const auto& v : st.invariants) {
      CAPTURE(st.step);
      CAPTURE(v.label);
      if (v.label == "t")
        CHECK(v.ok == (st.step == 0));
      else
        CHECK(v.ok);
    }
  // each state is the image of a homomorphism, so it satisfies F G = q G F
  FlowSpec flow = qp6_flow();
  const auto& sys = *flow.family.sys;
  oracle::PrimeField field = oracle::field_for_order(7);
  for (const auto& st : qp6.steps) {
    oracle::FpMat fg = st.state[0] * st.state[1];
    oracle::FpMat gf = (st.state[1] * st.state[0]).scaled(field.qpow(sys.c(0, 1)));
    CHECK(fg == gf);
  }
}

TEST_CASE("numeric and symbolic evolution agree") {
  FlowSpec f = qp6_flow();
  auto sym = evolve_symbolic(f, 2);
  REQUIRE(sym.size() == 3);
  CHECK(structurally_equal(sym[0].images[0].second, f.family.parse("F")));
  CHECK(equal(sym[1].images[0].second, apply_word(f.word, f.family.parse("F"))));
  auto num = evolve_numeric(f, 2, 5, 9);
  oracle::Representation rep = oracle::build_representation(f.family.sys, oracle::field_for_order(5), num.sample_seed);
  for (int i = 0; i < 2; ++i) CHECK(oracle::evaluate(sym[2].images[i].second, rep) == num.steps[2].state[i]);
  CHECK_THROWS_AS(evolve_symbolic(f, kSymbolicCap + 1), std::invalid_argument);
  auto zero = evolve_numeric(f, 0, 5, 9);
  REQUIRE(zero.steps.size() == 1);
  CHECK(*rep.gens[0] == zero.steps[0].state[0]);
}

TEST_CASE("trajectory export is one JSON object per step") {
  auto t = evolve_numeric(qp3_flow(), 3, 5, 2);
  std::string text = to_json_lines(t);
  std::size_t lines = 0, pos = 0;
  while ((pos = text.find('\n', pos)) != std::string::npos) ++lines, ++pos;
  CHECK(lines == 4);
  auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
  CHECK(first["step"] == 0);
  CHECK(first["invariants"]["c"]["ok"] == true);
  CHECK(first["state"].contains("F0"));
  CHECK(to_json_lines(evolve_numeric(qp3_flow(), 3, 5, 2)) == text);
}

TEST_CASE("classical and Poisson limits") {
  for (int l : {2, 3}) {
    auto rs = classical_limit_check(l, quick());
    for (const auto& r : rs) {
      CAPTURE(r.id);
      CHECK(r.passed());
    }
  }
  auto sys = quantum_a_system(3);
  CommutatorLimit far = commutator_limit(*sys, 0, 2);
  CHECK(far.exactly_zero);
  CHECK(far.leading == 0);
  CHECK(commutator_limit(*sys, 1, 2).leading == -1);
  CHECK(commutator_limit(*sys, 3, 0).leading == -1);
}

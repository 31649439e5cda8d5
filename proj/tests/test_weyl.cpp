#include "doctest.h"
#include "qweyl/series/identity.hpp"
#include "qweyl/series/named_identities.hpp"
#include "qweyl/weyl/relations.hpp"

using namespace qweyl;
using namespace qweyl::weyl;

namespace {

OracleConfig quick() {
  OracleConfig c;
  c.orders = {5, 7};
  c.trials = 4;
  c.seed = 23;
  return c;
}

bool equal(const Expr& a, const Expr& b, OracleConfig c = quick()) {
  return oracle::randomized_equal(a, b, c).verdict == Verdict::Equal;
}

bool all_pass(const std::vector<RelationReport>& rs) {
  for (const auto& r : rs) {
    CAPTURE(r.id);
    CHECK(r.passed());
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Cartan data satisfy their invariants") {
  for (const auto& c : {cartan_A(2), cartan_A(3), cartan_A(4), cartan_B2(), cartan_G2(), cartan_D5()}) {
    CAPTURE(c.label);
    CHECK(validate(c).empty());
  }
  CartanData d = cartan_D5();
  for (int j : {0, 1, 3}) CHECK(d.adjacent(2, j));
  for (int j : {2, 4, 5}) CHECK(d.adjacent(3, j));
  CHECK(!d.adjacent(0, 1));
  CHECK(!d.adjacent(4, 5));
  CartanData b = cartan_B2();
  CHECK(b.aij(1, 2) == -1);
  CHECK(b.aij(2, 1) == -2);
  CartanData broken = cartan_A(2);
  broken.u[1][0] = 2;
  CHECK(!validate(broken).empty());
}

TEST_CASE("reflections act on the central letters through the Cartan matrix") {
  auto b2 = rank2_family(Family::B2);
  CHECK(structurally_equal(canonicalize_light(b2.letter("s1")(b2.parse("a1"))), canonicalize_light(b2.parse("a1^-1"))));
  CHECK(equal(b2.letter("s1")(b2.parse("a2")), b2.parse("a1*a2")));
  CHECK(equal(b2.letter("s2")(b2.parse("a1")), b2.parse("a2^2*a1")));
  auto g2 = rank2_family(Family::G2);
  CHECK(equal(g2.letter("s2")(g2.parse("a1")), g2.parse("a2^3*a1")));
  auto d5 = d5_family();
  CHECK(equal(d5.letter("s2")(d5.parse("a3")), d5.parse("a2*a3")));
  CHECK(equal(d5.letter("s2")(d5.parse("a4")), d5.parse("a4")));
}

TEST_CASE("classical table examples") {
  auto f = classical_a_family(2);
  auto cfg = quick();
  cfg.commutative = true;
  CHECK(equal(f.letter("s1")(f.parse("a1")), f.parse("a1^-1"), cfg));
  CHECK(equal(f.letter("s1")(f.parse("f2")), f.parse("f2*(a1 + f1)*(1 + a1*f1)^-1"), cfg));
  CHECK(equal(f.letter("s1")(f.parse("f0")), f.parse("f0*(1 + a1*f1)*(a1 + f1)^-1"), cfg));
  CHECK(equal(f.letter("s1")(f.parse("f1")), f.parse("f1"), cfg));
  auto g = classical_a_family(3);
  CHECK(structurally_equal(g.letter("s0")(g.parse("f2")), g.parse("f2")));
}

TEST_CASE("quantum A table matches the Psi conjugation rule") {
  for (int l : {2, 3}) {
    auto f = quantum_a_family(l);
    for (int i = 0; i <= l; ++i) {
      Expr z = generator(f.sys, l + 1 + i);
      for (int j = 0; j <= l; ++j) {
        CAPTURE(l);
        CAPTURE(i);
        CAPTURE(j);
        Expr fj = generator(f.sys, j);
        Expr want = j == i ? fj : psi_adjoint_image(f.sys, j, i, 1, z);
        CHECK(equal(f.letter("s" + std::to_string(i))(fj), want));
      }
    }
  }
  auto a2 = quantum_a_family(2);
  CHECK(structurally_equal(a2.letter("s0")(a2.parse("F1")), a2.parse("F1*(a0 + F0)*(1 + a0*F0)^-1")));
}

TEST_CASE("rank-two tables match their closed forms") {
  auto b2 = rank2_family(Family::B2);
  CHECK(equal(b2.letter("s1")(b2.parse("F2")),
              b2.parse("F2*(a1 + F1)*(a1 + q^-1*F1)*((1 + a1*F1)*(1 + a1*q^-1*F1))^-1")));
  CHECK(equal(b2.letter("s2")(b2.parse("F1")), b2.parse("F1*(1 + a2^2*q^2*F2)*(a2^2 + q^2*F2)^-1")));
  CHECK(structurally_equal(b2.letter("s1")(b2.parse("F1")), b2.parse("F1")));
  auto g2 = rank2_family(Family::G2);
  CHECK(equal(g2.letter("s1")(g2.parse("F2")),
              g2.parse("F2*(a1 + F1)*(1 + a1*F1)^-1*(a1 + q^-1*F1)*(1 + a1*q^-1*F1)^-1*"
                       "(a1 + q^-2*F1)*(1 + a1*q^-2*F1)^-1")));
  CHECK(equal(g2.letter("s2")(g2.parse("F1")), g2.parse("F1*(1 + a2^3*q^3*F2)*(a2^3 + q^3*F2)^-1")));
  // the paper's order of the two B2 factors is immaterial, but a dropped q is not
  CHECK(!equal(b2.letter("s1")(b2.parse("F2")), b2.parse("F2*(a1 + F1)^2*(1 + a1*F1)^-2")));
}

TEST_CASE("conjugation factors are the Psi ratios") {
  using namespace qweyl::series;
  auto sys = GeneratorSystem::make({"M"}, {{0}}, {"z"});
  IdentityParams p;
  p.engine = Engine::Commutative;
  p.qmax = 10;
  for (int d : {1, 2, 3})
    for (int k : {-3, -2, -1, 1, 2}) {
      CAPTURE(d);
      CAPTURE(k);
      // Psi(z, q^{dk} M) Psi(z, M)^{-1}
      std::vector<SeriesFactor> lhs{psi_factor(make_monomial(*sys, {{"z", 1}}), make_monomial(*sys, {{"M", 1}}, d * k), d),
                                    psi_inverse_factor(make_monomial(*sys, {{"z", 1}}), make_monomial(*sys, {{"M", 1}}), d)};
      std::vector<SeriesFactor> rhs;
      if (k < 0) {
        // (z + q^{-dm} M) = q^{-dm} M (1 + z q^{dm} M^{-1})
        for (int m = 0; m < -k; ++m) {
          rhs.push_back(monomial_factor(make_monomial(*sys, {{"M", 1}}, -d * m)));
          rhs.push_back(one_plus_factor(make_monomial(*sys, {{"z", 1}, {"M", -1}}, d * m)));
          rhs.push_back(one_plus_inverse_factor(make_monomial(*sys, {{"z", 1}, {"M", 1}}, -d * m)));
        }
      } else {
        for (int m = 1; m <= k; ++m) {
          rhs.push_back(one_plus_factor(make_monomial(*sys, {{"z", 1}, {"M", 1}}, d * m)));
          rhs.push_back(monomial_factor(make_monomial(*sys, {{"M", -1}}, -d * m)));
          rhs.push_back(one_plus_inverse_factor(make_monomial(*sys, {{"z", 1}, {"M", -1}}, -d * m)));
        }
      }
      auto r = verify_identity(sys, lhs, rhs, p);
      CHECK(r.holds);
      CHECK(r.complete);
    }
}

TEST_CASE("D5 tables") {
  auto f = d5_family();
  CHECK(structurally_equal(f.letter("tau")(f.parse("F")), f.parse("G")));
  CHECK(structurally_equal(f.letter("tau")(f.parse("G")), f.parse("F")));
  for (int j = 0; j < 6; ++j)
    CHECK(equal(f.letter("tau")(f.parse("a" + std::to_string(j))), f.parse("a" + std::to_string(5 - j) + "^-1")));
  for (int j : {0, 1, 3, 4, 5}) CHECK(structurally_equal(f.letter("s" + std::to_string(j))(f.parse("F")), f.parse("F")));
  for (int j : {0, 1, 2, 4, 5}) CHECK(structurally_equal(f.letter("s" + std::to_string(j))(f.parse("G")), f.parse("G")));
  Expr g2 = apply_word(make_word(f, {"sigma45", "sigma45"}), f.parse("G"));
  CHECK(equal(f.letter("sigma45")(f.parse("G")), f.parse("q^-1*G^-1")));
  CHECK(equal(g2, f.parse("G")));
  CHECK(f.letter("sigma01").anti);
  CHECK(!f.letter("sigma").anti);
  CHECK(equal(f.letter("sigma")(f.parse("a4")), f.parse("a5")));
}

TEST_CASE("words apply their rightmost letter first") {
  auto f = quantum_a_family(2);
  GroupWord empty;
  CHECK(structurally_equal(apply_word(empty, f.parse("F0")), f.parse("F0")));
  GroupWord w = parse_word(f, "s1 s2w^-1");
  REQUIRE(w.names == std::vector<std::string>{"s1", "s2", "w^-1"});
  Expr x = f.parse("F1");
  Expr by_hand = f.letter("s1")(f.letter("s2")(f.letter("w^-1")(x)));
  CHECK(structurally_equal(apply_word(w, x), by_hand));
  CHECK(parse_word(f, "t1").names == w.names);
  for (const auto& g : f.probes()) CHECK(equal(apply_word(parse_word(f, "s1s1"), g), g));
  Endomorphism e = word_endomorphism(w, f.sys);
  for (const auto& g : f.probes()) CHECK(equal(e(g), apply_word(w, g)));
  CHECK_THROWS(parse_word(f, "s9"));
  CHECK_THROWS(parse_word(f, "s1 x"));
}

TEST_CASE("word parity composes") {
  auto f = d5_family();
  CHECK(parse_word(f, "sigma01").anti());
  CHECK(!parse_word(f, "sigma01 sigma45").anti());
  CHECK(!parse_word(f, "t3").anti());
  Endomorphism t = word_endomorphism(parse_word(f, "t3"), f.sys);
  CHECK(!t.anti);
  CHECK(equal(apply_word(parse_word(f, "t3"), f.parse("a2")), f.parse("p*a2")));
  CHECK(equal(apply_word(parse_word(f, "t3^-1 t3"), f.parse("F")), f.parse("F")));
}

TEST_CASE("noncommuting reflections are told apart") {
  auto f = quantum_a_family(2);
  auto r = check_relation(parse_word(f, "s0 s1"), parse_word(f, "s1 s0"), f.probes(), quick(), "control", false);
  CHECK(r.verdict == Verdict::Unequal);
  CHECK(r.passed());
  bool witnessed = false;
  for (const auto& p : r.probes) witnessed = witnessed || p.witness.has_value();
  CHECK(witnessed);
}

TEST_CASE("a table with a misplaced factor is not well defined") {
  auto f = quantum_a_family(2);
  Endomorphism bad = f.letter("s1");
  // F0 factor moved to the right without shifting q
  bad.images[0] = f.parse("F0*(1 + a1*F1)*(a1 + F1)^-1");
  bad.name = "bad";
  CHECK(check_well_defined(bad, quick(), "bad").verdict == Verdict::Unequal);
  CHECK(check_well_defined(f.letter("s1"), quick(), "s1").verdict == Verdict::Equal);
}

TEST_CASE("relation suites pass") {
  auto cfg = quick();
  CHECK(all_pass(a_classical_suite(2, cfg)));
  CHECK(all_pass(a_classical_suite(3, cfg)));
  CHECK(all_pass(a_quantum_suite(2, cfg)));
  CHECK(all_pass(a_quantum_suite(3, cfg)));
  CHECK(all_pass(rank2_suite(Family::B2, cfg)));
  CHECK(all_pass(rank2_suite(Family::G2, cfg)));
  CHECK(all_pass(d5_coxeter_suite(cfg)));
  CHECK(all_pass(d5_diagram_suite(cfg)));
  CHECK(all_pass(translations_suite(2, cfg)));
}

#include "qweyl/series/named_identities.hpp"

namespace qweyl::series {

Monomial make_monomial(const GeneratorSystem& sys, const std::vector<std::pair<std::string, int>>& letters,
                       long qpow, long scalar) {
  Monomial m = Monomial::constant(sys, Rational(scalar), qpow);
  for (const auto& [name, power] : letters)
    m = normal_order_product(m, Monomial::generator(sys, sys.require(name), power), sys);
  return m;
}

namespace {

IdentityParams params(int qmax, int cmax, Engine engine = Engine::Graded) {
  IdentityParams p;
  p.qmax = qmax;
  p.cmax = cmax;
  p.engine = engine;
  return p;
}

SystemPtr pentagon_system() { return GeneratorSystem::make({"F", "G"}, {{0, 1}, {-1, 0}}, {"u", "v"}); }
SystemPtr rank_two_system() { return GeneratorSystem::make({"F0", "F1"}, {{0, -1}, {1, 0}}, {"x", "y"}); }
SystemPtr b2_system() { return GeneratorSystem::make({"F1", "F2"}, {{0, -2}, {2, 0}}, {"a", "b"}); }
SystemPtr g2_system() { return GeneratorSystem::make({"F1", "F2"}, {{0, -3}, {3, 0}}, {"a", "b"}); }
SystemPtr single_system(const std::string& central) { return GeneratorSystem::make({"F"}, {{0}}, {central}); }

NamedIdentity pentagon_base(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = pentagon_system();
  id.params = params(qmax, cmax);
  return id;
}

std::vector<SeriesFactor> dilog_lhs(const GeneratorSystem& s) {
  Monomial f0 = make_monomial(s, {{"F0", 1}}), f1 = make_monomial(s, {{"F1", 1}});
  return {psi_factor(make_monomial(s, {{"x", 1}}), f0, 1, "Psi(x,F0)"),
          psi_factor(make_monomial(s, {{"x", 1}, {"y", 1}}), f1, 1, "Psi(xy,F1)"),
          psi_factor(make_monomial(s, {{"y", 1}}), f0, 1, "Psi(y,F0)")};
}

std::vector<SeriesFactor> dilog_rhs(const GeneratorSystem& s) {
  Monomial f0 = make_monomial(s, {{"F0", 1}}), f1 = make_monomial(s, {{"F1", 1}});
  return {psi_factor(make_monomial(s, {{"y", 1}}), f1, 1, "Psi(y,F1)"),
          psi_factor(make_monomial(s, {{"x", 1}, {"y", 1}}), f0, 1, "Psi(xy,F0)"),
          psi_factor(make_monomial(s, {{"x", 1}}), f1, 1, "Psi(x,F1)")};
}

// Psi_1^{a^i b^j} = Psi_q(a^i b^j, F1), Psi_2^{a^i b^j} = Psi_{q^d}((a^i b^j)^d, F2)
SeriesFactor rank_two_psi(const GeneratorSystem& s, int letter, int i, int j, int d) {
  const int k = letter == 1 ? 1 : d;
  Monomial z = make_monomial(s, {{"a", i * k}, {"b", j * k}});
  std::string name = letter == 1 ? "F1" : "F2";
  return psi_factor(z, make_monomial(s, {{name, 1}}), k,
                    "Psi" + std::to_string(letter) + "^{a^" + std::to_string(i) + "b^" + std::to_string(j) + "}");
}

std::vector<SeriesFactor> b2_side(const GeneratorSystem& s, bool left) {
  if (left)
    return {rank_two_psi(s, 1, 1, 0, 2), rank_two_psi(s, 2, 1, 1, 2), rank_two_psi(s, 1, 1, 2, 2),
            rank_two_psi(s, 2, 0, 1, 2)};
  return {rank_two_psi(s, 2, 0, 1, 2), rank_two_psi(s, 1, 1, 2, 2), rank_two_psi(s, 2, 1, 1, 2),
          rank_two_psi(s, 1, 1, 0, 2)};
}

std::vector<SeriesFactor> ratio_lhs(const GeneratorSystem& s) {
  Monomial z = make_monomial(s, {{"z", 1}});
  return {psi_factor(z, make_monomial(s, {{"F", 1}}, -1), 1, "Psi(z,q^-1 F)"),
          psi_inverse_factor(z, make_monomial(s, {{"F", 1}}), 1, "Psi(z,F)^-1")};
}

}  // namespace

NamedIdentity pentagon_identity(int qmax, int cmax) {
  NamedIdentity id = pentagon_base(qmax, cmax);
  const auto& s = *id.sys;
  id.id = "pentagon";
  id.description = "(G;q)(F;q) = (F;q)(GF;q)(G;q) for FG = qGF, with weights F -> uF, G -> vG";
  Monomial uf = make_monomial(s, {{"u", 1}, {"F", 1}}), vg = make_monomial(s, {{"v", 1}, {"G", 1}});
  Monomial gf = normal_order_product(make_monomial(s, {{"v", 1}, {"G", 1}}), uf, s);
  id.lhs = {pochhammer_factor(vg, 1, "(vG;q)"), pochhammer_factor(uf, 1, "(uF;q)")};
  id.rhs = {pochhammer_factor(uf, 1, "(uF;q)"), pochhammer_factor(gf, 1, "(uvGF;q)"), pochhammer_factor(vg, 1, "(vG;q)")};
  return id;
}

NamedIdentity pentagon_swapped_control(int qmax, int cmax) {
  NamedIdentity id = pentagon_identity(qmax, cmax);
  id.id = "pentagon-swapped";
  id.description = "pentagon with the two left factors swapped";
  std::swap(id.lhs[0], id.lhs[1]);
  id.expect_holds = false;
  return id;
}

NamedIdentity dilog_identity(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = rank_two_system();
  id.id = "dilog";
  id.description = "Psi(x,F0)Psi(xy,F1)Psi(y,F0) = Psi(y,F1)Psi(xy,F0)Psi(x,F1) for F0F1 = q^-1 F1F0";
  id.lhs = dilog_lhs(*id.sys);
  id.rhs = dilog_rhs(*id.sys);
  id.params = params(qmax, cmax);
  return id;
}

NamedIdentity dilog_swapped_control(int qmax, int cmax) {
  NamedIdentity id = dilog_identity(qmax, cmax);
  id.id = "dilog-swapped";
  id.description = "dilogarithm identity with the first two left factors swapped";
  std::swap(id.lhs[0], id.lhs[1]);
  id.expect_holds = false;
  return id;
}

NamedIdentity pseudoconstant_identity(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = single_system("a");
  const auto& s = *id.sys;
  id.id = "pseudoconstant";
  id.description = "Psi(a,F)Psi(a^-1,F) = Psi(a,qF)Psi(a^-1,qF)";
  Monomial a = make_monomial(s, {{"a", 1}}), ai = make_monomial(s, {{"a", -1}});
  Monomial f = make_monomial(s, {{"F", 1}}), qf = make_monomial(s, {{"F", 1}}, 1);
  id.lhs = {psi_factor(a, f, 1, "Psi(a,F)"), psi_factor(ai, f, 1, "Psi(a^-1,F)")};
  id.rhs = {psi_factor(a, qf, 1, "Psi(a,qF)"), psi_factor(ai, qf, 1, "Psi(a^-1,qF)")};
  id.params = params(qmax, cmax, Engine::Commutative);
  return id;
}

NamedIdentity one_step_ratio_identity(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = single_system("z");
  const auto& s = *id.sys;
  id.id = "one-step-ratio";
  id.description = "Psi(z,q^-1 F) Psi(z,F)^-1 = (z+F)(1+zF)^-1";
  id.lhs = ratio_lhs(s);
  id.rhs = {monomial_factor(make_monomial(s, {{"F", 1}}), "F"),
            one_plus_factor(make_monomial(s, {{"z", 1}, {"F", -1}}), "(1+zF^-1)"),
            one_plus_inverse_factor(make_monomial(s, {{"z", 1}, {"F", 1}}), "(1+zF)^-1")};
  id.params = params(qmax, cmax, Engine::Commutative);
  return id;
}

NamedIdentity one_step_ratio_wrong_shift_control(int qmax, int cmax) {
  NamedIdentity id = one_step_ratio_identity(qmax, cmax);
  const auto& s = *id.sys;
  id.id = "one-step-ratio-wrong-constant";
  id.description = "one-step ratio with (z+F) replaced by (z+qF)";
  id.rhs[0] = monomial_factor(make_monomial(s, {{"F", 1}}, 1), "qF");
  id.rhs[1] = one_plus_factor(make_monomial(s, {{"z", 1}, {"F", -1}}, -1), "(1+zq^-1F^-1)");
  id.expect_holds = false;
  return id;
}

NamedIdentity b2_identity(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = b2_system();
  id.id = "b2";
  id.description = "Psi1^a Psi2^ab Psi1^ab2 Psi2^b = Psi2^b Psi1^ab2 Psi2^ab Psi1^a, Psi2^x = Psi_{q^2}(x^2,F2)";
  id.lhs = b2_side(*id.sys, true);
  id.rhs = b2_side(*id.sys, false);
  id.params = params(qmax, cmax);
  return id;
}

NamedIdentity b2_swapped_control(int qmax, int cmax) {
  NamedIdentity id = b2_identity(qmax, cmax);
  id.id = "b2-swapped";
  id.description = "B2 identity with the middle left factors swapped";
  std::swap(id.lhs[1], id.lhs[2]);
  id.expect_holds = false;
  return id;
}

NamedIdentity g2_identity(int qmax, int cmax) {
  NamedIdentity id;
  id.sys = g2_system();
  const auto& s = *id.sys;
  id.id = "g2";
  id.description =
      "Psi1^a Psi2^ab Psi1^a2b3 Psi2^ab2 Psi1^ab3 Psi2^b = Psi2^b Psi1^ab3 Psi2^ab2 Psi1^a2b3 Psi2^ab Psi1^a, "
      "Psi2^x = Psi_{q^3}(x^3,F2)";
  id.lhs = {rank_two_psi(s, 1, 1, 0, 3), rank_two_psi(s, 2, 1, 1, 3), rank_two_psi(s, 1, 2, 3, 3),
            rank_two_psi(s, 2, 1, 2, 3), rank_two_psi(s, 1, 1, 3, 3), rank_two_psi(s, 2, 0, 1, 3)};
  id.rhs = {rank_two_psi(s, 2, 0, 1, 3), rank_two_psi(s, 1, 1, 3, 3), rank_two_psi(s, 2, 1, 2, 3),
            rank_two_psi(s, 1, 2, 3, 3), rank_two_psi(s, 2, 1, 1, 3), rank_two_psi(s, 1, 1, 0, 3)};
  id.params = params(qmax, cmax);
  return id;
}

std::vector<NamedIdentity> series_identities() {
  return {pentagon_identity(),          dilog_identity(),          pseudoconstant_identity(),
          one_step_ratio_identity(),    b2_identity(),             g2_identity(),
          pentagon_swapped_control(),   dilog_swapped_control(),   b2_swapped_control(),
          one_step_ratio_wrong_shift_control()};
}

}  // namespace qweyl::series

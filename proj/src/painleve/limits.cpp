#include "qweyl/painleve/limits.hpp"

namespace qweyl::painleve {

using namespace qweyl::weyl;

CommutatorLimit commutator_limit(const GeneratorSystem& sys, int i, int j) {
  Monomial fi = Monomial::generator(sys, i), fj = Monomial::generator(sys, j);
  Monomial ij = normal_order_product(fi, fj, sys), ji = normal_order_product(fj, fi, sys);
  if (ij.exps != ji.exps) throw std::logic_error("commutator terms differ in their letters");
  CommutatorLimit r;
  r.i = i;
  r.j = j;
  r.leading = ij.qpow - ji.qpow;
  r.exactly_zero = ij == ji;
  return r;
}

std::vector<RelationReport> classical_limit_check(int l, OracleConfig cfg) {
  cfg.commutative = true;
  ActionFamily f = quantum_a_family(l);
  std::vector<RelationReport> out;
  for (int i = 0; i <= l; ++i) {
    Endomorphism quantum = quantum_A(f.sys, l, i);
    Endomorphism classical = classical_kny(f.sys, f.cartan, i);
    std::vector<Comparison> items;
    for (int g = 0; g < f.sys->size(); ++g)
      items.push_back({f.sys->name(g), quantum.images[g], classical.images[g]});
    std::string si = "s" + std::to_string(i);
    out.push_back(compare_all(f.name + ":q=1(" + si + ")", "quantum table at q = 1 equals the classical table",
                              si + " quantum", si + " classical", items, cfg));
  }
  RelationReport brackets{f.name + ":poisson-limit", "leading (q-1) coefficient of commutators",
                          "[F_i, F_j]/(q-1) at q = 1", "-F_iF_j if j = i+1, else 0", true, {}, {}};
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      CommutatorLimit c = commutator_limit(*f.sys, i, j);
      bool forward = j == i + 1, backward = i == 0 && j == l;
      long want = forward ? -1 : backward ? 1 : 0;
      bool ok = c.leading == want && (want != 0 || c.exactly_zero);
      ProbeOutcome p;
      p.probe = "[" + f.sys->name(i) + "," + f.sys->name(j) + "]";
      p.verdict = ok ? Verdict::Equal : Verdict::Unequal;
      p.note = "leading " + std::to_string(c.leading) + ", expected " + std::to_string(want);
      brackets.probes.push_back(std::move(p));
    }
  brackets.verdict = aggregate(brackets.probes);
  out.push_back(std::move(brackets));
  return out;
}

}  // namespace qweyl::painleve

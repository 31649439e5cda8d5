#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweyl/expression.hpp"
#include "qweyl/weyl/cartan.hpp"

namespace qweyl::weyl {

// Noncommuting letters first, then the centrals a_*; node i of the Cartan
// data is the central at offset i - first.  For A_l and rank 2 the same
// offset also locates F_i.
SystemPtr classical_a_system(int l);
SystemPtr quantum_a_system(int l);
SystemPtr rank2_system(Family f);
SystemPtr d5_system();

// s_i(a_j) = a_i^{-a_ij} a_j on the central block, identity elsewhere.
Endomorphism cartan_reflection(const SystemPtr& sys, const CartanData& c, int i);

// s_i(f_j) = f_j ((a_i + f_i)/(1 + a_i f_i))^{u_ij}
Endomorphism classical_kny(const SystemPtr& sys, const CartanData& c, int i);

// Ad(S_i) on the A_l^(1) torus, conjugation factors placed as in the quantum table.
Endomorphism quantum_A(const SystemPtr& sys, int l, int i);

// omega^power: a_i -> a_{i+power}, F_i -> F_{i+power}, indices mod l+1.
Endomorphism omega_A(const SystemPtr& sys, int l, int power);

// Image of generator x under Ad(Psi_{q^d}(z, M)), M the generator m, with the
// conjugation factor on the right.
Expr psi_adjoint_image(const SystemPtr& sys, int x, int m, int d, const Expr& z);

Endomorphism quantum_rank2(const SystemPtr& sys, Family f, int i);

Endomorphism d5_generator(const SystemPtr& sys, int i);

// sigma01, sigma45, tau (anti-automorphisms) and sigma = sigma01 sigma45.
Endomorphism d5_diagram(const SystemPtr& sys, const std::string& name);

struct ActionFamily {
  std::string name;
  CartanData cartan;
  SystemPtr sys;
  std::map<std::string, Endomorphism> letters;
  std::map<std::string, std::string> inverse_of;
  std::map<std::string, std::vector<std::string>> macros;
  AliasTable aliases;

  std::vector<Expr> probes() const;
  Expr parse(const std::string& text) const { return parse_expression(text, sys, aliases); }
  const Endomorphism& letter(const std::string& name) const;
};

ActionFamily classical_a_family(int l);
ActionFamily quantum_a_family(int l);
ActionFamily rank2_family(Family f);
ActionFamily d5_family();

// a2, a3, ... ; a2-classical, ... ; b2; g2; d5
ActionFamily family_by_name(const std::string& name);

}  // namespace qweyl::weyl

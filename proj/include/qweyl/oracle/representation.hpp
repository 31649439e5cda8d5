#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/expression.hpp"
#include "qweyl/oracle/fp_matrix.hpp"
#include "qweyl/oracle/skew_normal_form.hpp"

namespace qweyl::oracle {

// Matrices for the generators satisfying g_i g_j = zeta^{C_ij} g_j g_i over
// Z/p; q is evaluated at zeta.  Generators outside the support are absent.
struct Representation {
  SystemPtr sys;
  PrimeField field;
  int dim = 1;
  std::uint64_t seed = 0;
  std::vector<std::optional<FpMat>> gens;
};

Representation build_representation(const SystemPtr& sys, const PrimeField& field,
                                    std::uint64_t seed,
                                    const std::vector<bool>* support = nullptr);

// 1x1 sample with q = 1; every generator is an independent random scalar.
Representation commutative_sample(const SystemPtr& sys, const PrimeField& field, std::uint64_t seed);

// Checks g_i g_j = zeta^{C_ij} g_j g_i and centrality for all present generators.
bool satisfies_relations(const Representation& rep);

FpMat evaluate(const Expr& e, const Representation& rep);

}  // namespace qweyl::oracle

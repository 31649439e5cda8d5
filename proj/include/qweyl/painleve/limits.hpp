#pragma once

#include "qweyl/painleve/flows.hpp"

namespace qweyl::painleve {

// Leading coefficient of F_i F_j - F_j F_i at q = 1, relative to F_i F_j:
// the commutator is (q^a - q^b) F_i F_j / q^a, and (q^a - q^b)/(q - 1) -> a - b.
struct CommutatorLimit {
  int i = 0;
  int j = 0;
  long leading = 0;
  bool exactly_zero = false;
};

CommutatorLimit commutator_limit(const GeneratorSystem& sys, int i, int j);

// (a) every quantum A_l table at q = 1 equals the classical table, compared by
// commutative evaluation; (b) adjacent commutators have leading coefficient -1
// and non-adjacent ones vanish.
std::vector<RelationReport> classical_limit_check(int l, OracleConfig cfg);

}  // namespace qweyl::painleve

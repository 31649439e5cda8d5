#pragma once

#include <string>
#include <vector>

#include "qweyl/oracle/representation.hpp"

namespace qweyl::oracle {

struct OracleConfig {
  std::vector<int> orders{5, 7, 8, 9, 11, 13};
  int trials = 20;
  std::uint64_t seed = 1;
  int retries = 8;
  std::uint64_t prime_floor = 1ULL << 20;
  // evaluate at q = 1 in commuting scalars instead of root-of-unity matrices
  bool commutative = false;
};

enum class Verdict { Equal, Unequal, Inconclusive };

const char* to_string(Verdict v);

struct Witness {
  int order = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int trial = 0;
  int row = -1;
  int col = -1;
};

struct OracleResult {
  Verdict verdict = Verdict::Inconclusive;
  Witness witness;
  int samples = 0;
  int singular_samples = 0;
  bool syntactic = false;
  std::string note;
};

OracleResult randomized_equal(const Expr& lhs, const Expr& rhs, const OracleConfig& cfg);

}  // namespace qweyl::oracle

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/oracle/randomized_equal.hpp"
#include "qweyl/weyl/words.hpp"

namespace qweyl::weyl {

using oracle::OracleConfig;
using oracle::Verdict;

struct ProbeOutcome {
  std::string probe;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<oracle::Witness> witness;
  std::string note;
};

struct RelationReport {
  std::string id;
  std::string description;
  std::string lhs;
  std::string rhs;
  bool expect_equal = true;
  std::vector<ProbeOutcome> probes;
  Verdict verdict = Verdict::Inconclusive;

  bool passed() const { return expect_equal ? verdict == Verdict::Equal : verdict == Verdict::Unequal; }
};

struct Comparison {
  std::string probe;
  Expr lhs;
  Expr rhs;
};

Verdict aggregate(const std::vector<ProbeOutcome>& probes);

RelationReport compare_all(std::string id, std::string description, std::string lhs, std::string rhs,
                           const std::vector<Comparison>& items, const OracleConfig& cfg, bool expect_equal = true);

// w1(x) = w2(x) for every probe x
RelationReport check_relation(const GroupWord& w1, const GroupWord& w2, const std::vector<Expr>& probes,
                              const OracleConfig& cfg, std::string id, bool expect_equal = true);

// images of generators satisfy the defining relations (reversed for anti maps)
// and images of centrals commute with every image
RelationReport check_well_defined(const Endomorphism& phi, const OracleConfig& cfg, std::string id);

// Suites of relation checks for the named families.
std::vector<RelationReport> a_classical_suite(int l, OracleConfig cfg);
std::vector<RelationReport> a_quantum_suite(int l, const OracleConfig& cfg);
std::vector<RelationReport> rank2_suite(Family f, const OracleConfig& cfg);
std::vector<RelationReport> d5_coxeter_suite(const OracleConfig& cfg);
std::vector<RelationReport> d5_diagram_suite(const OracleConfig& cfg);
std::vector<RelationReport> translations_suite(int l, const OracleConfig& cfg);

}  // namespace qweyl::weyl

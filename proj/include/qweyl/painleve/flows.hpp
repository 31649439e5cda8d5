#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qweyl/weyl/relations.hpp"

namespace qweyl::painleve {

using weyl::OracleConfig;
using weyl::RelationReport;

// quantity_n = multiplier^n * quantity_0 along a trajectory
struct Conserved {
  std::string label;
  Expr quantity;
  Expr multiplier;
};

struct FlowSpec {
  std::string name;
  weyl::ActionFamily family;
  weyl::GroupWord word;
  weyl::GroupWord inverse;
  std::vector<weyl::GroupWord> alternatives;
  // (probe, expected image) under the word and under its inverse, as stated
  std::vector<std::pair<Expr, Expr>> closed_forms;
  std::vector<std::pair<Expr, Expr>> inverse_closed_forms;
  std::vector<std::pair<Expr, Expr>> invariant_table;
  // forms recomputed from the word where the stated ones disagree with it
  std::vector<std::pair<Expr, Expr>> corrected_closed_forms;
  std::vector<std::pair<Expr, Expr>> corrected_inverse_closed_forms;
  std::vector<std::pair<Expr, Expr>> corrected_invariant_table;
  std::vector<Conserved> conserved;
};

// T_k = s_k ... s_l w^-1 s_1 ... s_{k-1}
weyl::GroupWord translation_word(const weyl::ActionFamily& f, int k);

FlowSpec qp3_flow();
FlowSpec qp6_flow();

// closed forms, invariant table, inverse coherence and agreement of alternative words
std::vector<RelationReport> flow_coherence(const FlowSpec& flow, const OracleConfig& cfg);

std::vector<RelationReport> qp3_suite(const OracleConfig& cfg);
std::vector<RelationReport> qp6_suite(const OracleConfig& cfg);
std::vector<RelationReport> qp6_zy_form_check(const OracleConfig& cfg);
std::vector<RelationReport> qp6_symmetry_check(const OracleConfig& cfg);

// deliberately broken relations; each report expects an unequal verdict
std::vector<RelationReport> falsification_controls(const OracleConfig& cfg);

}  // namespace qweyl::painleve

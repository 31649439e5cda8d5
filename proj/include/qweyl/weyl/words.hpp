#pragma once

#include <string>
#include <vector>

#include "qweyl/weyl/families.hpp"

namespace qweyl::weyl {

// s_{i1} s_{i2} ... s_{ik} acts by x -> s_{i1}(s_{i2}(... s_{ik}(x) ...)).
struct GroupWord {
  std::vector<std::string> names;
  std::vector<Endomorphism> letters;

  bool empty() const { return letters.empty(); }
  // true when an odd number of anti-automorphisms occur
  bool anti() const;
  std::string label() const;
};

GroupWord make_word(const ActionFamily& f, const std::vector<std::string>& names);

// Letters separated by spaces or '*', or written back to back ("s1s2w^-1").
// Macro letters such as t3 are expanded.
GroupWord parse_word(const ActionFamily& f, const std::string& text);

GroupWord inverse_word(const ActionFamily& f, const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& w, int k);

Expr apply_word(const GroupWord& w, const Expr& e);

// single table with the same action as the word
Endomorphism word_endomorphism(const GroupWord& w, const SystemPtr& sys);

}  // namespace qweyl::weyl

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweyl/series/graded_series.hpp"

namespace qweyl::series {

using GaussianWord = std::vector<Gaussian>;

// A nonzero coefficient of LHS - RHS (or a mismatch in a Gaussian word).
struct Discrepancy {
  std::string part;
  std::vector<int> exps;
  int qexp = 0;
  Coeff value = 0;
};

// Cancels adjacent G G^{-1} and G^{-1} G pairs.
GaussianWord reduce_word(const GaussianWord& w);

// Theta^{-1} X Theta for Theta = G_1 ... G_k.
KeyedMonomial word_conjugate(const SeriesContext& ctx, KeyedMonomial x, const GaussianWord& w);

struct GaussianComparison {
  bool equal = true;
  std::string method;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

// Compares two Gaussian words by their conjugation action on every noncommuting
// letter and, when both words are products of Gaussian sums whose exponent form is
// positive definite on every fiber, coefficientwise for letter exponents in
// [-box, box] and q-exponents below qmax.
GaussianComparison compare_gaussian_words(const SeriesContext& ctx, const GaussianWord& lhs,
                                          const GaussianWord& rhs, int qmax, int box);

// Coefficients of the normal-ordered product of positive Gaussian sums:
// q-exponent -> coefficient at letter exponents e, below qmax.
// Returns false when the exponent form is not positive definite on the fibers.
bool gaussian_word_coefficients(const SeriesContext& ctx, const GaussianWord& w, const std::vector<int>& e,
                                int qmax, std::map<int, Coeff>& out);

}  // namespace qweyl::series

#pragma once

#include <unordered_map>
#include <vector>

#include "qweyl/series/graded_series.hpp"

namespace qweyl::series {

// Laurent polynomials in pairwise commuting letters with q-adic coefficients,
// all known below one uniform precision, divided by exact binomials (1 + m)
// whose m has q-degree 0.
class CommSeries {
 public:
  using Map = std::unordered_map<Key, QSeries, KeyHash>;

  CommSeries(ContextPtr ctx, int prec);

  static CommSeries one(ContextPtr ctx);
  static CommSeries monomial(ContextPtr ctx, const Monomial& m);
  static CommSeries one_plus(ContextPtr ctx, const Monomial& m);
  static CommSeries one_plus_inverse(ContextPtr ctx, const Monomial& m, int prec);
  // (x; q^d)_inf = prod_{k>=0} (1 + x q^{dk})
  static CommSeries pochhammer(ContextPtr ctx, const Monomial& x, int d, int prec);
  static CommSeries pochhammer_inverse(ContextPtr ctx, const Monomial& x, int d, int prec);
  // (x; q^d)_inf (q^d x^{-1}; q^d)_inf
  static CommSeries theta(ContextPtr ctx, const Monomial& x, int d, int prec);
  static CommSeries theta_inverse(ContextPtr ctx, const Monomial& x, int d, int prec);
  // (q^d M; q^d)(M^{-1}; q^d) / ((z q^d M; q^d)(z M^{-1}; q^d))
  static CommSeries psi(ContextPtr ctx, const Monomial& z, const Monomial& m, int d, int prec);
  static CommSeries psi_inverse(ContextPtr ctx, const Monomial& z, const Monomial& m, int d, int prec);

  const ContextPtr& context() const { return ctx_; }
  int prec() const { return prec_; }
  const Map& terms() const { return terms_; }
  const std::vector<Monomial>& denominators() const { return den_; }
  QSeries coefficient(const Key& k) const;
  int valuation() const;

  CommSeries operator*(const CommSeries& o) const;
  CommSeries operator+(const CommSeries& o) const;
  CommSeries operator-(const CommSeries& o) const;

  // numerator only, with the given binomials multiplied in
  CommSeries numerator_times(const std::vector<Monomial>& binomials) const;
  void truncate(int prec);

 private:
  void accumulate(const Key& k, const QSeries& s, Coeff sign = 1);
  void check_commuting(const CommSeries& o) const;

  ContextPtr ctx_;
  int prec_;
  Map terms_;
  std::vector<Monomial> den_;
  std::uint32_t support_ = 0;
};

// Monomial inverse with integer scalar, for commuting letters.
Monomial commutative_inverse(const SeriesContext& ctx, const Monomial& m);

}  // namespace qweyl::series

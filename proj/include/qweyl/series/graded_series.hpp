#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "qweyl/series/key.hpp"
#include "qweyl/series/qseries.hpp"

namespace qweyl::series {

// Letter data shared by all series over one generator system.
struct SeriesContext {
  SystemPtr sys;
  int nc = 0;
  int n = 0;
  std::vector<int> c;  // nc x nc

  explicit SeriesContext(SystemPtr s);
  long beta(const Key& x, const Key& y) const;
  long omega(const Key& x, const Key& y) const;
  int central_degree(const Key& k) const;
  bool has_negative_central(const Key& k) const;
  // q-exponent of L^k in normal order: beta(L,L) k(k-1)/2
  long power_qpow(const Key& l, long k) const;
  Key scale(const Key& l, long k) const;
};

using ContextPtr = std::shared_ptr<const SeriesContext>;

ContextPtr make_context(const SystemPtr& sys);

// G_{d,s}(L) = sum_n q^{d n(n+1)/2 + s n} L^n, L a monomial in noncommuting letters.
struct Gaussian {
  Key letter;
  int d = 1;
  int s = 0;
  int power = 1;  // +1 or -1

  bool same_base(const Gaussian& o) const { return letter == o.letter && d == o.d && s == o.s; }
};

// Sum over keys of (q-series) * letters^key, central degree <= cmax.
// Every stored q-series carries its own precision; an absent key is exactly zero.
class GradedSeries {
 public:
  using Map = std::unordered_map<Key, QSeries, KeyHash>;

  GradedSeries(ContextPtr ctx, int cmax, int cap);

  static GradedSeries one(ContextPtr ctx, int cmax, int cap);
  static GradedSeries monomial(ContextPtr ctx, int cmax, int cap, const Monomial& m);
  // exact 1 + m
  static GradedSeries one_plus(ContextPtr ctx, int cmax, int cap, const Monomial& m);
  // (1 + m)^{-1}, m of positive central degree
  static GradedSeries one_plus_inverse(ContextPtr ctx, int cmax, int cap, const Monomial& m);
  // (x; q^d)_inf = prod_{k>=0} (1 + x q^{dk}), x of positive central degree
  static GradedSeries pochhammer(ContextPtr ctx, int cmax, int cap, const Monomial& x, int d);
  static GradedSeries pochhammer_inverse(ContextPtr ctx, int cmax, int cap, const Monomial& x, int d);
  // prod_{m>=1} (1 - q^{dm})^{sign}
  static GradedSeries euler(ContextPtr ctx, int cmax, int cap, int d, int sign);

  const ContextPtr& context() const { return ctx_; }
  int cmax() const { return cmax_; }
  int cap() const { return cap_; }
  const Map& terms() const { return terms_; }
  QSeries coefficient(const Key& k) const;

  GradedSeries operator*(const GradedSeries& o) const;
  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;

  // G^{-1} X G for every term X (G^{+1}) or G X G^{-1} (G^{-1}).
  GradedSeries conjugate_by(const Gaussian& g) const;

  // Restricts to central degree <= cmax and q-exponents < qmax.
  GradedSeries projected(int qmax, int cmax) const;

  // smallest precision over stored terms
  int min_precision() const;

 private:
  void accumulate(const Key& k, const QSeries& s, Coeff sign = 1);

  ContextPtr ctx_;
  int cmax_;
  int cap_;
  Map terms_;
};

// Image of a letter monomial (scalar q^qpow, exponents key) under G^{-1} . G.
struct KeyedMonomial {
  long qpow = 0;
  Key key;
  bool operator==(const KeyedMonomial& o) const { return qpow == o.qpow && key == o.key; }
};

KeyedMonomial conjugate_monomial(const SeriesContext& ctx, const KeyedMonomial& x, const Gaussian& g);

}  // namespace qweyl::series

#pragma once

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl::series {

using Coeff = std::int64_t;

// precision of an exact (finite) Laurent polynomial
inline constexpr int kExact = INT_MAX / 4;

class NonConvergent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// sum_k c[k - lo] q^k + O(q^prec); coefficients are stored only below prec.
struct QSeries {
  int lo = 0;
  std::vector<Coeff> c;
  int prec = kExact;

  static QSeries exact_zero() { return {}; }
  static QSeries zero_to(int prec);
  static QSeries monomial(Coeff v, int k, int prec = kExact);

  Coeff at(int k) const;
  int valuation() const;  // first nonzero exponent, prec if none
  bool is_exact() const { return prec >= kExact; }
  bool is_exact_zero() const;
  int hi() const { return lo + static_cast<int>(c.size()); }

  void add(const QSeries& o, Coeff sign = 1);
  void shift(long k);
  void truncate(int p);
  void normalize();

  // product, keeping coefficients below min(result precision, cap)
  QSeries times(const QSeries& o, int cap = kExact) const;

  std::string to_string() const;
};

bool operator==(const QSeries& a, const QSeries& b);

int clamp_prec(long p);

}  // namespace qweyl::series

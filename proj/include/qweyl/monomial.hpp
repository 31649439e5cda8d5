#pragma once

#include <string>
#include <vector>

#include "qweyl/system.hpp"

namespace qweyl {

// scalar * q^qpow * g_0^{e_0} ... g_{n-1}^{e_{n-1}} in generator order.
struct Monomial {
  Rational scalar{1};
  long qpow = 0;
  std::vector<int> exps;

  static Monomial unit(const GeneratorSystem& sys);
  static Monomial zero(const GeneratorSystem& sys);
  static Monomial constant(const GeneratorSystem& sys, const Rational& c, long qpow = 0);
  static Monomial generator(const GeneratorSystem& sys, int index, int power = 1);

  bool is_zero() const { return scalar == 0; }
  bool is_scalar() const;
  bool is_central(const GeneratorSystem& sys) const;
  bool same_letters(const Monomial& o) const { return exps == o.exps; }
  int central_degree(const GeneratorSystem& sys) const;

  bool operator==(const Monomial& o) const {
    return scalar == o.scalar && (scalar == 0 || (qpow == o.qpow && exps == o.exps));
  }
};

Monomial normal_order_product(const Monomial& a, const Monomial& b, const GeneratorSystem& sys);
Monomial inverse(const Monomial& m, const GeneratorSystem& sys);
Monomial power(const Monomial& m, int k, const GeneratorSystem& sys);

std::string to_string(const Monomial& m, const GeneratorSystem& sys);

}  // namespace qweyl

#include "qweyl/monomial.hpp"

#include <sstream>

namespace qweyl {

Monomial Monomial::unit(const GeneratorSystem& sys) {
  Monomial m;
  m.exps.assign(sys.size(), 0);
  return m;
}

Monomial Monomial::zero(const GeneratorSystem& sys) {
  Monomial m = unit(sys);
  m.scalar = 0;
  return m;
}

Monomial Monomial::constant(const GeneratorSystem& sys, const Rational& c, long qpow) {
  Monomial m = unit(sys);
  m.scalar = c;
  m.qpow = c == 0 ? 0 : qpow;
  return m;
}

Monomial Monomial::generator(const GeneratorSystem& sys, int index, int power) {
  Monomial m = unit(sys);
  m.exps.at(index) = power;
  return m;
}

bool Monomial::is_scalar() const {
  for (int e : exps)
    if (e != 0) return false;
  return true;
}

bool Monomial::is_central(const GeneratorSystem& sys) const {
  for (int i = 0; i < sys.noncommuting_count(); ++i)
    if (exps[i] != 0) return false;
  return true;
}

int Monomial::central_degree(const GeneratorSystem& sys) const {
  int d = 0;
  for (int i = sys.noncommuting_count(); i < sys.size(); ++i) d += exps[i];
  return d;
}

Monomial normal_order_product(const Monomial& a, const Monomial& b, const GeneratorSystem& sys) {
  if (a.is_zero() || b.is_zero()) return Monomial::zero(sys);
  Monomial r;
  r.scalar = a.scalar * b.scalar;
  r.qpow = a.qpow + b.qpow + sys.beta(a.exps, b.exps);
  r.exps.resize(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
  return r;
}

Monomial inverse(const Monomial& m, const GeneratorSystem& sys) {
  if (m.is_zero()) throw AlgebraError("inverse of zero monomial");
  Monomial r;
  r.scalar = 1 / m.scalar;
  r.exps.resize(m.exps.size());
  for (std::size_t i = 0; i < m.exps.size(); ++i) r.exps[i] = -m.exps[i];
  // m * r = q^{qpow + r.qpow + beta(e,-e)} must be 1
  r.qpow = -m.qpow - sys.beta(m.exps, r.exps);
  return r;
}

Monomial power(const Monomial& m, int k, const GeneratorSystem& sys) {
  if (k < 0) return power(inverse(m, sys), -k, sys);
  Monomial r = Monomial::unit(sys);
  Monomial base = m;
  while (k > 0) {
    if (k & 1) r = normal_order_product(r, base, sys);
    k >>= 1;
    if (k) base = normal_order_product(base, base, sys);
  }
  return r;
}

std::string to_string(const Monomial& m, const GeneratorSystem& sys) {
  std::ostringstream os;
  if (m.is_zero()) return "0";
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  Rational c = m.scalar;
  bool letters = m.qpow != 0 || !m.is_scalar();
  if (c == -1 && letters) {
    os << '-';
  } else if (c != 1 || !letters) {
    sep();
    os << c.get_str();
  }
  if (m.qpow != 0) {
    sep();
    os << 'q';
    if (m.qpow != 1) os << '^' << m.qpow;
  }
  for (int i = 0; i < sys.size(); ++i) {
    if (m.exps[i] == 0) continue;
    sep();
    os << sys.name(i);
    if (m.exps[i] != 1) os << '^' << m.exps[i];
  }
  return os.str();
}

}  // namespace qweyl

#include "qweyl/series/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qweyl::series {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

int clamp_prec(long p) {
  if (p >= kExact) return kExact;
  if (p <= -kExact) return -kExact;
  return static_cast<int>(p);
}

QSeries QSeries::zero_to(int prec) {
  QSeries s;
  s.lo = prec;
  s.prec = prec;
  return s;
}

QSeries QSeries::monomial(Coeff v, int k, int prec) {
  QSeries s;
  s.prec = prec;
  if (k < prec && v != 0) {
    s.lo = k;
    s.c = {v};
  } else {
    s.lo = std::min(k, prec);
  }
  return s;
}

Coeff QSeries::at(int k) const {
  if (k < lo || k >= hi()) return 0;
  return c[k - lo];
}

int QSeries::valuation() const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return lo + static_cast<int>(i);
  return prec;
}

bool QSeries::is_exact_zero() const { return is_exact() && valuation() == kExact; }

void QSeries::normalize() {
  std::size_t b = 0;
  while (b < c.size() && c[b] == 0) ++b;
  if (b == c.size()) {
    c.clear();
    lo = std::min(prec, lo);
    return;
  }
  std::size_t e = c.size();
  while (e > b && c[e - 1] == 0) --e;
  c = std::vector<Coeff>(c.begin() + b, c.begin() + e);
  lo += static_cast<int>(b);
}

void QSeries::truncate(int p) {
  if (p >= prec) return;
  prec = p;
  if (hi() > prec) {
    long keep = static_cast<long>(prec) - lo;
    c.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
  }
  if (c.empty()) lo = std::min(lo, prec);
  normalize();
}

void QSeries::shift(long k) {
  if (c.empty() && is_exact()) return;
  lo = clamp_prec(lo + k);
  if (!is_exact()) prec = clamp_prec(prec + k);
}

void QSeries::add(const QSeries& o, Coeff sign) {
  int p = std::min(prec, o.prec);
  if (o.c.empty()) {
    truncate(p);
    return;
  }
  int nlo = c.empty() ? o.lo : std::min(lo, o.lo);
  int nhi = std::min(p, std::max(hi(), o.hi()));
  if (nhi <= nlo) {
    c.clear();
    lo = std::min(nlo, p);
    prec = p;
    return;
  }
  std::vector<Coeff> r(static_cast<std::size_t>(nhi - nlo), 0);
  for (int k = std::max(lo, nlo); k < std::min(hi(), nhi); ++k) r[k - nlo] = c[k - lo];
  for (int k = std::max(o.lo, nlo); k < std::min(o.hi(), nhi); ++k)
    r[k - nlo] = checked_add(r[k - nlo], checked_mul(sign, o.c[k - o.lo]));
  c = std::move(r);
  lo = nlo;
  prec = p;
  normalize();
}

QSeries QSeries::times(const QSeries& o, int cap) const {
  const int va = valuation(), vb = o.valuation();
  long p = std::min(static_cast<long>(prec) + vb, static_cast<long>(o.prec) + va);
  if (is_exact() && o.is_exact()) p = kExact;
  QSeries r;
  r.prec = clamp_prec(std::min<long>(p, cap));
  if (c.empty() || o.c.empty()) {
    r.lo = std::min(r.prec, clamp_prec(static_cast<long>(lo) + o.lo));
    return r;
  }
  r.lo = lo + o.lo;
  long top = std::min(static_cast<long>(hi()) + o.hi() - 1, static_cast<long>(r.prec));
  if (top <= r.lo) {
    r.lo = std::min(r.lo, r.prec);
    return r;
  }
  r.c.assign(static_cast<std::size_t>(top - r.lo), 0);
  const int n = static_cast<int>(r.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int lim = std::min(static_cast<int>(o.c.size()), n - static_cast<int>(i));
    for (int j = 0; j < lim; ++j)
      if (o.c[j] != 0) r.c[i + j] = checked_add(r.c[i + j], checked_mul(c[i], o.c[j]));
  }
  r.normalize();
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    os << c[i] << "*q^" << lo + static_cast<int>(i);
    first = false;
  }
  if (!is_exact()) os << (first ? "" : " + ") << "O(q^" << prec << ")";
  if (first && is_exact()) os << "0";
  return os.str();
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.prec != b.prec) return false;
  int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
  for (int k = lo; k < hi; ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

}  // namespace qweyl::series

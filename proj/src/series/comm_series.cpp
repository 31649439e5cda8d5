#include "qweyl/series/comm_series.hpp"

#include <algorithm>

namespace qweyl::series {

namespace {

Coeff integer_scalar(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw AlgebraError("series coefficients must be machine integers");
  return r.get_num().get_si();
}

std::uint32_t support_mask(const SeriesContext& ctx, const Key& k) {
  std::uint32_t m = 0;
  for (int i = 0; i < ctx.nc; ++i)
    if (k.e[i]) m |= 1u << i;
  return m;
}

Key key_of(const SeriesContext& ctx, const Monomial& m) {
  if (static_cast<int>(m.exps.size()) != ctx.n) throw AlgebraError("monomial from another system");
  return Key::from(m.exps);
}

Monomial with_qpow(Monomial m, long k) {
  m.qpow += k;
  return m;
}

}  // namespace

Monomial commutative_inverse(const SeriesContext& ctx, const Monomial& m) {
  if (m.scalar != 1 && m.scalar != -1) throw AlgebraError("inverting a monomial with a non-unit scalar");
  Monomial r = m;
  r.qpow = -m.qpow;
  for (int i = 0; i < ctx.n; ++i) r.exps[i] = -m.exps[i];
  return r;
}

CommSeries::CommSeries(ContextPtr ctx, int prec) : ctx_(std::move(ctx)), prec_(prec) {}

CommSeries CommSeries::one(ContextPtr ctx) {
  CommSeries s(std::move(ctx), kExact);
  s.terms_.emplace(Key{}, QSeries::monomial(1, 0));
  return s;
}

CommSeries CommSeries::monomial(ContextPtr ctx, const Monomial& m) {
  CommSeries s(ctx, kExact);
  if (m.is_zero()) return s;
  Key k = key_of(*ctx, m);
  s.support_ = support_mask(*ctx, k);
  s.check_commuting(s);
  s.terms_.emplace(k, QSeries::monomial(integer_scalar(m.scalar), static_cast<int>(m.qpow)));
  return s;
}

CommSeries CommSeries::one_plus(ContextPtr ctx, const Monomial& m) {
  return one(ctx) + monomial(ctx, m);
}

CommSeries CommSeries::one_plus_inverse(ContextPtr ctx, const Monomial& m, int prec) {
  if (m.is_zero()) return one(ctx);
  Key k = key_of(*ctx, m);
  if (m.qpow == 0) {
    CommSeries s = one(ctx);
    s.support_ = support_mask(*ctx, k);
    s.check_commuting(s);
    s.den_.push_back(m);
    return s;
  }
  if (m.qpow > 0) {
    const Coeff v = integer_scalar(m.scalar);
    CommSeries s(ctx, prec);
    s.support_ = support_mask(*ctx, k);
    s.check_commuting(s);
    Coeff coeff = 1;
    for (long j = 0; j * m.qpow < prec; ++j) {
      s.accumulate(ctx->scale(k, j), QSeries::monomial(coeff, static_cast<int>(j * m.qpow)));
      coeff = checked_mul(coeff, -v);
    }
    s.truncate(prec);
    return s;
  }
  Monomial mi = commutative_inverse(*ctx, m);
  return monomial(ctx, mi) * one_plus_inverse(ctx, mi, prec);
}

CommSeries CommSeries::pochhammer(ContextPtr ctx, const Monomial& x, int d, int prec) {
  if (d < 1) throw NonConvergent("pochhammer base q^d needs d >= 1");
  long negsum = 0;
  for (long k = x.qpow; k < 0; k += d) negsum += k;
  CommSeries s = one(ctx);
  for (long k = x.qpow; k < prec - negsum; k += d) s = s * one_plus(ctx, with_qpow(x, k - x.qpow));
  s.truncate(prec);
  return s;
}

CommSeries CommSeries::pochhammer_inverse(ContextPtr ctx, const Monomial& x, int d, int prec) {
  if (d < 1) throw NonConvergent("pochhammer base q^d needs d >= 1");
  CommSeries s = one(ctx);
  for (long k = x.qpow; k < prec; k += d) s = s * one_plus_inverse(ctx, with_qpow(x, k - x.qpow), prec);
  s.truncate(prec);
  return s;
}

CommSeries CommSeries::theta(ContextPtr ctx, const Monomial& x, int d, int prec) {
  if (d < 1) throw NonConvergent("theta base q^d needs d >= 1");
  Monomial y = with_qpow(commutative_inverse(*ctx, x), d);
  return pochhammer(ctx, x, d, prec) * pochhammer(ctx, y, d, prec);
}

CommSeries CommSeries::theta_inverse(ContextPtr ctx, const Monomial& x, int d, int prec) {
  if (d < 1) throw NonConvergent("theta base q^d needs d >= 1");
  Monomial y = with_qpow(commutative_inverse(*ctx, x), d);
  return pochhammer_inverse(ctx, x, d, prec) * pochhammer_inverse(ctx, y, d, prec);
}

namespace {

struct PsiParts {
  Monomial num1, num2, den1, den2;
};

PsiParts psi_parts(const SeriesContext& ctx, const Monomial& z, const Monomial& m, int d) {
  Monomial mi = commutative_inverse(ctx, m);
  PsiParts p;
  p.num1 = with_qpow(m, d);
  p.num2 = mi;
  p.den1 = with_qpow(normal_order_product(z, m, *ctx.sys), d);
  p.den2 = normal_order_product(z, mi, *ctx.sys);
  return p;
}

}  // namespace

CommSeries CommSeries::psi(ContextPtr ctx, const Monomial& z, const Monomial& m, int d, int prec) {
  PsiParts p = psi_parts(*ctx, z, m, d);
  return pochhammer(ctx, p.num1, d, prec) * pochhammer(ctx, p.num2, d, prec) *
         pochhammer_inverse(ctx, p.den1, d, prec) * pochhammer_inverse(ctx, p.den2, d, prec);
}

CommSeries CommSeries::psi_inverse(ContextPtr ctx, const Monomial& z, const Monomial& m, int d, int prec) {
  PsiParts p = psi_parts(*ctx, z, m, d);
  return pochhammer(ctx, p.den1, d, prec) * pochhammer(ctx, p.den2, d, prec) *
         pochhammer_inverse(ctx, p.num1, d, prec) * pochhammer_inverse(ctx, p.num2, d, prec);
}

QSeries CommSeries::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  if (it == terms_.end()) return prec_ >= kExact ? QSeries::exact_zero() : QSeries::zero_to(prec_);
  return it->second;
}

int CommSeries::valuation() const {
  int v = prec_;
  for (const auto& [k, s] : terms_) v = std::min(v, s.valuation());
  return v;
}

void CommSeries::accumulate(const Key& k, const QSeries& s, Coeff sign) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    QSeries t = QSeries::exact_zero();
    t.add(s, sign);
    terms_.emplace(k, std::move(t));
  } else {
    it->second.add(s, sign);
  }
}

void CommSeries::check_commuting(const CommSeries& o) const {
  const std::uint32_t u = support_ | o.support_;
  for (int i = 0; i < ctx_->nc; ++i) {
    if (!(u >> i & 1u)) continue;
    for (int j = i + 1; j < ctx_->nc; ++j)
      if ((u >> j & 1u) && ctx_->c[i * ctx_->nc + j] != 0)
        throw AlgebraError("commutative series need pairwise commuting letters");
  }
}

void CommSeries::truncate(int prec) {
  prec_ = std::min(prec_, prec);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.truncate(prec_);
    if (it->second.c.empty()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

CommSeries CommSeries::operator*(const CommSeries& o) const {
  check_commuting(o);
  const long va = valuation(), vb = o.valuation();
  long p = std::min(static_cast<long>(prec_) + vb, static_cast<long>(o.prec_) + va);
  if (prec_ >= kExact && o.prec_ >= kExact) p = kExact;
  CommSeries r(ctx_, clamp_prec(p));
  r.support_ = support_ | o.support_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  for (const auto& [ka, sa] : terms_)
    for (const auto& [kb, sb] : o.terms_) r.accumulate(ka.plus(kb), sa.times(sb, r.prec_));
  r.truncate(r.prec_);
  return r;
}

CommSeries CommSeries::operator+(const CommSeries& o) const {
  if (!den_.empty() || !o.den_.empty()) throw AlgebraError("adding series with denominators");
  check_commuting(o);
  CommSeries r = *this;
  r.support_ |= o.support_;
  for (const auto& [k, s] : o.terms_) r.accumulate(k, s);
  r.truncate(std::min(prec_, o.prec_));
  return r;
}

CommSeries CommSeries::operator-(const CommSeries& o) const {
  if (!den_.empty() || !o.den_.empty()) throw AlgebraError("subtracting series with denominators");
  check_commuting(o);
  CommSeries r = *this;
  r.support_ |= o.support_;
  for (const auto& [k, s] : o.terms_) r.accumulate(k, s, -1);
  r.truncate(std::min(prec_, o.prec_));
  return r;
}

CommSeries CommSeries::numerator_times(const std::vector<Monomial>& binomials) const {
  CommSeries r = *this;
  r.den_.clear();
  for (const auto& m : binomials) r = r * one_plus(ctx_, m);
  return r;
}

}  // namespace qweyl::series

#include "qweyl/series/graded_series.hpp"

#include <algorithm>

namespace qweyl::series {

SeriesContext::SeriesContext(SystemPtr s) : sys(std::move(s)) {
  nc = sys->noncommuting_count();
  n = sys->size();
  if (n > kMaxLetters) throw std::invalid_argument("series systems support at most 8 letters");
  c.resize(static_cast<std::size_t>(nc) * nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) c[i * nc + j] = sys->c(i, j);
}

long SeriesContext::beta(const Key& x, const Key& y) const {
  long s = 0;
  for (int i = 1; i < nc; ++i) {
    if (!x.e[i]) continue;
    for (int j = 0; j < i; ++j) s += static_cast<long>(x.e[i]) * y.e[j] * c[i * nc + j];
  }
  return s;
}

long SeriesContext::omega(const Key& x, const Key& y) const {
  long s = 0;
  for (int i = 0; i < nc; ++i) {
    if (!x.e[i]) continue;
    for (int j = 0; j < nc; ++j) s += static_cast<long>(x.e[i]) * y.e[j] * c[i * nc + j];
  }
  return s;
}

int SeriesContext::central_degree(const Key& k) const {
  int d = 0;
  for (int i = nc; i < n; ++i) d += k.e[i];
  return d;
}

bool SeriesContext::has_negative_central(const Key& k) const {
  for (int i = nc; i < n; ++i)
    if (k.e[i] < 0) return true;
  return false;
}

long SeriesContext::power_qpow(const Key& l, long k) const { return beta(l, l) * k * (k - 1) / 2; }

Key SeriesContext::scale(const Key& l, long k) const {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<int>(l.e[i] * k);
  return Key::from(v);
}

ContextPtr make_context(const SystemPtr& sys) { return std::make_shared<const SeriesContext>(sys); }

namespace {

Coeff integer_scalar(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw AlgebraError("series coefficients must be machine integers");
  return r.get_num().get_si();
}

Key monomial_key(const SeriesContext& ctx, const Monomial& m) {
  if (static_cast<int>(m.exps.size()) != ctx.n) throw AlgebraError("monomial from another system");
  Key k = Key::from(m.exps);
  if (ctx.has_negative_central(k)) throw AlgebraError("graded series need nonnegative central exponents");
  return k;
}

void require_positive(const SeriesContext& ctx, const Key& k, const char* what) {
  if (ctx.central_degree(k) <= 0)
    throw NonConvergent(std::string(what) + ": expansion variable has no positive central degree");
}

}  // namespace

GradedSeries::GradedSeries(ContextPtr ctx, int cmax, int cap) : ctx_(std::move(ctx)), cmax_(cmax), cap_(cap) {}

GradedSeries GradedSeries::one(ContextPtr ctx, int cmax, int cap) {
  GradedSeries s(std::move(ctx), cmax, cap);
  s.terms_.emplace(Key{}, QSeries::monomial(1, 0));
  return s;
}

GradedSeries GradedSeries::monomial(ContextPtr ctx, int cmax, int cap, const Monomial& m) {
  GradedSeries s(ctx, cmax, cap);
  if (m.is_zero()) return s;
  Key k = monomial_key(*ctx, m);
  if (ctx->central_degree(k) <= cmax)
    s.terms_.emplace(k, QSeries::monomial(integer_scalar(m.scalar), static_cast<int>(m.qpow)));
  return s;
}

GradedSeries GradedSeries::one_plus(ContextPtr ctx, int cmax, int cap, const Monomial& m) {
  return one(ctx, cmax, cap) + monomial(ctx, cmax, cap, m);
}

GradedSeries GradedSeries::one_plus_inverse(ContextPtr ctx, int cmax, int cap, const Monomial& m) {
  Key k = monomial_key(*ctx, m);
  require_positive(*ctx, k, "geometric inverse");
  const int deg = ctx->central_degree(k);
  const Coeff v = integer_scalar(m.scalar);
  GradedSeries s(ctx, cmax, cap);
  Coeff coeff = 1;
  for (int j = 0; j * deg <= cmax; ++j) {
    long qp = j * m.qpow + ctx->power_qpow(k, j);
    s.terms_.emplace(ctx->scale(k, j), QSeries::monomial(coeff, static_cast<int>(qp)));
    coeff = checked_mul(coeff, -v);
  }
  return s;
}

namespace {

// index K beyond which the factors x q^{dk} only touch exponents >= cap
int factor_bound(const SeriesContext& ctx, const Key& k, long qpow, int d, int cmax, int cap) {
  const int deg = ctx.central_degree(k);
  const long jmax = cmax / deg;
  long low = qpow;
  for (long j = 1; j <= jmax; ++j) low = std::min(low, j * qpow + ctx.power_qpow(k, j));
  long kk = 0;
  while (low + d * kk < cap) ++kk;
  return static_cast<int>(kk);
}

void cap_positive_degrees(GradedSeries::Map& terms, const SeriesContext& ctx, int cap) {
  for (auto& [k, s] : terms)
    if (ctx.central_degree(k) > 0) s.truncate(cap);
}

}  // namespace

GradedSeries GradedSeries::pochhammer(ContextPtr ctx, int cmax, int cap, const Monomial& x, int d) {
  if (d < 1) throw NonConvergent("pochhammer base q^d needs d >= 1");
  Key k = monomial_key(*ctx, x);
  require_positive(*ctx, k, "pochhammer");
  int kk = factor_bound(*ctx, k, x.qpow, d, cmax, cap);
  GradedSeries s = one(ctx, cmax, cap);
  for (int i = 0; i < kk; ++i) {
    Monomial xi = x;
    xi.qpow += static_cast<long>(d) * i;
    s = s * one_plus(ctx, cmax, cap, xi);
  }
  cap_positive_degrees(s.terms_, *ctx, cap);
  return s;
}

GradedSeries GradedSeries::pochhammer_inverse(ContextPtr ctx, int cmax, int cap, const Monomial& x, int d) {
  if (d < 1) throw NonConvergent("pochhammer base q^d needs d >= 1");
  Key k = monomial_key(*ctx, x);
  require_positive(*ctx, k, "pochhammer inverse");
  int kk = factor_bound(*ctx, k, x.qpow, d, cmax, cap);
  GradedSeries s = one(ctx, cmax, cap);
  for (int i = 0; i < kk; ++i) {
    Monomial xi = x;
    xi.qpow += static_cast<long>(d) * i;
    s = s * one_plus_inverse(ctx, cmax, cap, xi);
  }
  cap_positive_degrees(s.terms_, *ctx, cap);
  return s;
}

GradedSeries GradedSeries::euler(ContextPtr ctx, int cmax, int cap, int d, int sign) {
  if (d < 1) throw NonConvergent("euler product needs d >= 1");
  QSeries acc = QSeries::monomial(1, 0);
  for (int m = 1; d * m < cap; ++m) {
    QSeries f;
    if (sign > 0) {
      f.lo = 0;
      f.c.assign(static_cast<std::size_t>(d * m) + 1, 0);
      f.c[0] = 1;
      f.c[d * m] = -1;
    } else {
      f.lo = 0;
      f.prec = cap;
      f.c.assign(static_cast<std::size_t>(cap), 0);
      for (int k = 0; k < cap; k += d * m) f.c[k] = 1;
    }
    acc = acc.times(f, cap);
  }
  acc.truncate(cap);
  GradedSeries s(ctx, cmax, cap);
  s.terms_.emplace(Key{}, acc);
  return s;
}

QSeries GradedSeries::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  if (it == terms_.end()) return QSeries::exact_zero();
  return it->second;
}

void GradedSeries::accumulate(const Key& k, const QSeries& s, Coeff sign) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    QSeries t = QSeries::exact_zero();
    t.add(s, sign);
    terms_.emplace(k, std::move(t));
  } else {
    it->second.add(s, sign);
  }
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  GradedSeries r(ctx_, std::min(cmax_, o.cmax_), std::min(cap_, o.cap_));
  std::vector<std::pair<Key, const QSeries*>> a, b;
  for (const auto& [k, s] : terms_) a.push_back({k, &s});
  for (const auto& [k, s] : o.terms_) b.push_back({k, &s});
  auto by_key = [](const auto& x, const auto& y) { return x.first < y.first; };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  for (const auto& [ka, sa] : a) {
    const int da = ctx_->central_degree(ka);
    for (const auto& [kb, sb] : b) {
      if (da + ctx_->central_degree(kb) > r.cmax_) continue;
      const long beta = ctx_->beta(ka, kb);
      QSeries p = sa->times(*sb, clamp_prec(static_cast<long>(r.cap_) - beta));
      p.shift(beta);
      r.accumulate(ka.plus(kb), p);
    }
  }
  return r;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  GradedSeries r = *this;
  r.cmax_ = std::min(cmax_, o.cmax_);
  r.cap_ = std::min(cap_, o.cap_);
  for (const auto& [k, s] : o.terms_) r.accumulate(k, s);
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  GradedSeries r = *this;
  r.cmax_ = std::min(cmax_, o.cmax_);
  r.cap_ = std::min(cap_, o.cap_);
  for (const auto& [k, s] : o.terms_) r.accumulate(k, s, -1);
  return r;
}

KeyedMonomial conjugate_monomial(const SeriesContext& ctx, const KeyedMonomial& x, const Gaussian& g) {
  const long w = ctx.omega(x.key, g.letter);
  if (w % g.d != 0) throw AlgebraError("conjugation shift is not a multiple of the gaussian base");
  const long t = w / g.d;
  KeyedMonomial r;
  if (g.power > 0) {
    Key lt = ctx.scale(g.letter, -t);
    r.key = lt.plus(x.key);
    r.qpow = x.qpow - g.s * t - g.d * t * (t + 1) / 2 + ctx.power_qpow(g.letter, -t) + ctx.beta(lt, x.key);
  } else {
    Key lt = ctx.scale(g.letter, t);
    r.key = x.key.plus(lt);
    r.qpow = x.qpow + g.s * t - g.d * t * (t - 1) / 2 + ctx.power_qpow(g.letter, t) + ctx.beta(x.key, lt);
  }
  return r;
}

GradedSeries GradedSeries::conjugate_by(const Gaussian& g) const {
  GradedSeries r(ctx_, cmax_, cap_);
  for (const auto& [k, s] : terms_) {
    KeyedMonomial m = conjugate_monomial(*ctx_, {0, k}, g);
    QSeries t = s;
    t.shift(m.qpow);
    r.accumulate(m.key, t);
  }
  return r;
}

GradedSeries GradedSeries::projected(int qmax, int cmax) const {
  GradedSeries r(ctx_, std::min(cmax, cmax_), std::min(qmax, cap_));
  for (const auto& [k, s] : terms_) {
    if (ctx_->central_degree(k) > cmax) continue;
    QSeries t = s;
    t.truncate(qmax);
    r.terms_.emplace(k, std::move(t));
  }
  return r;
}

int GradedSeries::min_precision() const {
  int p = kExact;
  for (const auto& [k, s] : terms_) p = std::min(p, s.prec);
  return p;
}

}  // namespace qweyl::series

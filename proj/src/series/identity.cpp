#include "qweyl/series/identity.hpp"

#include <algorithm>
#include <map>

namespace qweyl::series {

namespace {

SeriesFactor make(SeriesFactor::Kind kind, const Monomial& a, const Monomial& b, int d, std::string label) {
  SeriesFactor f;
  f.kind = kind;
  f.a = a;
  f.b = b;
  f.d = d;
  f.label = std::move(label);
  return f;
}

constexpr std::size_t kKeptDiscrepancies = 32;

}  // namespace

SeriesFactor psi_factor(const Monomial& z, const Monomial& m, int d, std::string label) {
  return make(SeriesFactor::Kind::Psi, z, m, d, std::move(label));
}
SeriesFactor psi_inverse_factor(const Monomial& z, const Monomial& m, int d, std::string label) {
  return make(SeriesFactor::Kind::PsiInverse, z, m, d, std::move(label));
}
SeriesFactor pochhammer_factor(const Monomial& x, int d, std::string label) {
  return make(SeriesFactor::Kind::Pochhammer, x, {}, d, std::move(label));
}
SeriesFactor pochhammer_inverse_factor(const Monomial& x, int d, std::string label) {
  return make(SeriesFactor::Kind::PochhammerInverse, x, {}, d, std::move(label));
}
SeriesFactor theta_factor(const Monomial& x, int d, std::string label) {
  return make(SeriesFactor::Kind::Theta, x, {}, d, std::move(label));
}
SeriesFactor theta_inverse_factor(const Monomial& x, int d, std::string label) {
  return make(SeriesFactor::Kind::ThetaInverse, x, {}, d, std::move(label));
}
SeriesFactor monomial_factor(const Monomial& m, std::string label) {
  return make(SeriesFactor::Kind::Monomial, m, {}, 1, std::move(label));
}
SeriesFactor one_plus_factor(const Monomial& m, std::string label) {
  return make(SeriesFactor::Kind::OnePlus, m, {}, 1, std::move(label));
}
SeriesFactor one_plus_inverse_factor(const Monomial& m, std::string label) {
  return make(SeriesFactor::Kind::OnePlusInverse, m, {}, 1, std::move(label));
}

std::string to_string(Engine e) { return e == Engine::Graded ? "graded" : "commutative"; }

namespace {

struct Built {
  GaussianWord gauss;
  std::map<int, int> kappa;
  GradedSeries body;
};

// M = q^s L with L a product of noncommuting letters
Gaussian gaussian_of(const SeriesContext& ctx, const Monomial& m, int d, long s, int power) {
  if (m.scalar != 1) throw AlgebraError("Gaussian argument must have scalar 1");
  if (m.central_degree(*ctx.sys) != 0 || !std::all_of(m.exps.begin() + ctx.nc, m.exps.end(), [](int e) { return e == 0; }))
    throw NonConvergent("Gaussian argument with central letters has no positive grading");
  Gaussian g;
  g.letter = Key::from(m.exps);
  g.d = d;
  g.s = static_cast<int>(s);
  g.power = power;
  return g;
}

void require_central(const SeriesContext& ctx, const Monomial& z) {
  if (!z.is_central(*ctx.sys)) throw AlgebraError("psi parameter must be central");
}

Built build_graded(const ContextPtr& ctx, const SeriesFactor& f, int cmax, int cap) {
  using K = SeriesFactor::Kind;
  const auto& sys = *ctx->sys;
  Built b{{}, {}, GradedSeries::one(ctx, cmax, cap)};
  switch (f.kind) {
    case K::Psi:
    case K::PsiInverse: {
      require_central(*ctx, f.a);
      const int power = f.kind == K::Psi ? 1 : -1;
      b.gauss.push_back(gaussian_of(*ctx, f.b, f.d, f.b.qpow, power));
      b.kappa[f.d] += power;
      Monomial x1 = normal_order_product(f.a, f.b, sys);
      x1.qpow += f.d;
      Monomial x2 = normal_order_product(f.a, inverse(f.b, sys), sys);
      if (power > 0) {
        b.body = GradedSeries::pochhammer_inverse(ctx, cmax, cap, x1, f.d) *
                 GradedSeries::pochhammer_inverse(ctx, cmax, cap, x2, f.d);
      } else {
        b.body = GradedSeries::pochhammer(ctx, cmax, cap, x1, f.d) * GradedSeries::pochhammer(ctx, cmax, cap, x2, f.d);
      }
      break;
    }
    case K::Theta:
    case K::ThetaInverse: {
      if (f.d < 1) throw NonConvergent("theta base q^d needs d >= 1");
      const int power = f.kind == K::Theta ? 1 : -1;
      b.gauss.push_back(gaussian_of(*ctx, f.a, f.d, f.a.qpow - f.d, power));
      b.kappa[f.d] += power;
      break;
    }
    case K::Pochhammer:
      b.body = GradedSeries::pochhammer(ctx, cmax, cap, f.a, f.d);
      break;
    case K::PochhammerInverse:
      b.body = GradedSeries::pochhammer_inverse(ctx, cmax, cap, f.a, f.d);
      break;
    case K::Monomial:
      b.body = GradedSeries::monomial(ctx, cmax, cap, f.a);
      break;
    case K::OnePlus:
      b.body = GradedSeries::one_plus(ctx, cmax, cap, f.a);
      break;
    case K::OnePlusInverse:
      b.body = GradedSeries::one_plus_inverse(ctx, cmax, cap, f.a);
      break;
  }
  return b;
}

Built graded_side(const ContextPtr& ctx, const std::vector<SeriesFactor>& fs, int cmax, int cap) {
  Built acc{{}, {}, GradedSeries::one(ctx, cmax, cap)};
  for (const auto& f : fs) {
    Built b = build_graded(ctx, f, cmax, cap);
    GradedSeries body = acc.body;
    for (const auto& g : b.gauss) body = body.conjugate_by(g);
    acc.body = body * b.body;
    acc.gauss.insert(acc.gauss.end(), b.gauss.begin(), b.gauss.end());
    for (const auto& [d, k] : b.kappa) acc.kappa[d] += k;
  }
  acc.gauss = reduce_word(acc.gauss);
  return acc;
}

GradedSeries kappa_power(const ContextPtr& ctx, int cmax, int cap, int d, int n) {
  GradedSeries r = GradedSeries::one(ctx, cmax, cap);
  for (int i = 0; i < std::abs(n); ++i) r = r * GradedSeries::euler(ctx, cmax, cap, d, n > 0 ? -1 : 1);
  return r;
}

template <class Map>
void collect(const Map& terms, int n, const std::string& part, IdentityReport& rep) {
  std::vector<Discrepancy> all;
  for (const auto& [k, s] : terms)
    for (std::size_t i = 0; i < s.c.size(); ++i)
      if (s.c[i] != 0) all.push_back({part, k.to_vector(n), s.lo + static_cast<int>(i), s.c[i]});
  std::sort(all.begin(), all.end(), [](const Discrepancy& a, const Discrepancy& b) {
    return std::tie(a.exps, a.qexp) < std::tie(b.exps, b.qexp);
  });
  rep.discrepancy_count += all.size();
  for (auto& d : all)
    if (rep.discrepancies.size() < kKeptDiscrepancies) rep.discrepancies.push_back(std::move(d));
}

IdentityReport verify_graded(const SystemPtr& sys, const std::vector<SeriesFactor>& lhs,
                             const std::vector<SeriesFactor>& rhs, const IdentityParams& p) {
  IdentityReport rep;
  rep.engine = Engine::Graded;
  rep.qmax = p.qmax;
  rep.cmax = p.cmax;
  ContextPtr ctx = make_context(sys);
  int cap = std::min(p.max_precision, p.qmax + 16);
  for (;;) {
    Built l = graded_side(ctx, lhs, p.cmax, cap), r = graded_side(ctx, rhs, p.cmax, cap);
    std::map<int, int> net = l.kappa;
    for (const auto& [d, k] : r.kappa) net[d] -= k;
    GradedSeries lb = l.body;
    for (const auto& [d, k] : net)
      if (k != 0) lb = kappa_power(ctx, p.cmax, cap, d, k) * lb;
    GradedSeries diff = (lb - r.body).projected(p.qmax, p.cmax);
    rep.working_precision = cap;
    if (diff.min_precision() >= p.qmax || cap >= p.max_precision) {
      rep.complete = diff.min_precision() >= p.qmax;
      GaussianComparison g = compare_gaussian_words(*ctx, l.gauss, r.gauss, p.qmax, p.gaussian_box);
      rep.gaussian_check = g.method + (g.equal ? "" : " (mismatch)");
      rep.notes = g.notes;
      rep.discrepancy_count = g.discrepancies.size();
      for (const auto& d : g.discrepancies)
        if (rep.discrepancies.size() < kKeptDiscrepancies) rep.discrepancies.push_back(d);
      collect(diff.terms(), ctx->n, "body", rep);
      if (!rep.complete) rep.notes.push_back("working precision limit reached before q^" + std::to_string(p.qmax));
      rep.holds = rep.complete && rep.discrepancy_count == 0;
      return rep;
    }
    cap = std::min(p.max_precision, 2 * cap);
  }
}

CommSeries build_comm(const ContextPtr& ctx, const SeriesFactor& f, int prec) {
  using K = SeriesFactor::Kind;
  switch (f.kind) {
    case K::Psi:
      return CommSeries::psi(ctx, f.a, f.b, f.d, prec);
    case K::PsiInverse:
      return CommSeries::psi_inverse(ctx, f.a, f.b, f.d, prec);
    case K::Pochhammer:
      return CommSeries::pochhammer(ctx, f.a, f.d, prec);
    case K::PochhammerInverse:
      return CommSeries::pochhammer_inverse(ctx, f.a, f.d, prec);
    case K::Theta:
      return CommSeries::theta(ctx, f.a, f.d, prec);
    case K::ThetaInverse:
      return CommSeries::theta_inverse(ctx, f.a, f.d, prec);
    case K::Monomial:
      return CommSeries::monomial(ctx, f.a);
    case K::OnePlus:
      return CommSeries::one_plus(ctx, f.a);
    case K::OnePlusInverse:
      return CommSeries::one_plus_inverse(ctx, f.a, prec);
  }
  throw std::logic_error("unknown factor kind");
}

CommSeries comm_side(const ContextPtr& ctx, const std::vector<SeriesFactor>& fs, int prec) {
  CommSeries acc = CommSeries::one(ctx);
  for (const auto& f : fs) acc = acc * build_comm(ctx, f, prec);
  return acc;
}

IdentityReport verify_commutative(const SystemPtr& sys, const std::vector<SeriesFactor>& lhs,
                                  const std::vector<SeriesFactor>& rhs, const IdentityParams& p) {
  IdentityReport rep;
  rep.engine = Engine::Commutative;
  rep.qmax = p.qmax;
  rep.cmax = p.cmax;
  rep.gaussian_check = "not applicable";
  ContextPtr ctx = make_context(sys);
  int w = std::min(p.max_precision, p.qmax + 8);
  for (;;) {
    CommSeries a = comm_side(ctx, lhs, w), b = comm_side(ctx, rhs, w);
    std::vector<Monomial> dl = a.denominators(), dr = b.denominators();
    for (auto it = dl.begin(); it != dl.end();) {
      auto jt = std::find(dr.begin(), dr.end(), *it);
      if (jt != dr.end()) {
        dr.erase(jt);
        it = dl.erase(it);
      } else {
        ++it;
      }
    }
    CommSeries diff = a.numerator_times(dr) - b.numerator_times(dl);
    diff.truncate(p.qmax);
    rep.working_precision = w;
    if (diff.prec() >= p.qmax || w >= p.max_precision) {
      rep.complete = diff.prec() >= p.qmax;
      collect(diff.terms(), ctx->n, "series", rep);
      if (!rep.complete) rep.notes.push_back("working precision limit reached before q^" + std::to_string(p.qmax));
      rep.holds = rep.complete && rep.discrepancy_count == 0;
      return rep;
    }
    w = std::min(p.max_precision, w + (p.qmax - diff.prec()) + 8);
  }
}

}  // namespace

IdentityReport verify_identity(const SystemPtr& sys, const std::vector<SeriesFactor>& lhs,
                               const std::vector<SeriesFactor>& rhs, const IdentityParams& params) {
  if (params.engine == Engine::Graded) return verify_graded(sys, lhs, rhs, params);
  return verify_commutative(sys, lhs, rhs, params);
}

CommSeries qpochhammer(const ContextPtr& ctx, const Monomial& x, int d, int qmax) {
  return CommSeries::pochhammer(ctx, x, d, qmax);
}

CommSeries theta(const ContextPtr& ctx, const Monomial& x, int d, int qmax) {
  return CommSeries::theta(ctx, x, d, qmax);
}

CommSeries psi(const ContextPtr& ctx, const Monomial& z, const Monomial& m, int d, int qmax) {
  return CommSeries::psi(ctx, z, m, d, qmax);
}

GradedSeries graded_product(const ContextPtr& ctx, const std::vector<SeriesFactor>& factors, int qmax, int cmax,
                            int max_precision) {
  int cap = std::min(max_precision, qmax + 16);
  for (;;) {
    Built b = graded_side(ctx, factors, cmax, cap);
    if (!b.gauss.empty()) throw AlgebraError("graded product has an uncancelled Gaussian part");
    GradedSeries body = b.body;
    for (const auto& [d, k] : b.kappa)
      if (k != 0) body = kappa_power(ctx, cmax, cap, d, k) * body;
    GradedSeries out = body.projected(qmax, cmax);
    if (out.min_precision() >= qmax || cap >= max_precision) return out;
    cap = std::min(max_precision, 2 * cap);
  }
}

}  // namespace qweyl::series

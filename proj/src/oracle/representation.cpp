#include "qweyl/oracle/representation.hpp"

#include <unordered_map>

namespace qweyl::oracle {

namespace {

// U^a V^b on tensor slot `slot` of (Z/N)^m, with U = diag(zeta^{d j}), V e_j = e_{j+1}.
FpMat clock_shift(int m, int order, int slot, long long d, long long a, long long b,
                  const PrimeField& f) {
  int dim = 1;
  for (int i = 0; i < m; ++i) dim *= order;
  int stride = 1;
  for (int i = 0; i < slot; ++i) stride *= order;
  std::vector<int> perm(dim);
  std::vector<u32> vals(dim);
  long long shift = ((b % order) + order) % order;
  for (int j = 0; j < dim; ++j) {
    int digit = (j / stride) % order;
    int nd = static_cast<int>((digit + shift) % order);
    perm[j] = j + (nd - digit) * stride;
    vals[j] = f.qpow(static_cast<long>((d * a % order) * nd % order));
  }
  return FpMat::monomial(std::move(perm), std::move(vals), f.p);
}

}  // namespace

Representation build_representation(const SystemPtr& sys, const PrimeField& field,
                                    std::uint64_t seed, const std::vector<bool>* support) {
  Representation rep;
  rep.sys = sys;
  rep.field = field;
  rep.seed = seed;
  rep.gens.assign(sys->size(), std::nullopt);
  std::mt19937_64 rng(seed);

  std::vector<int> letters;
  for (int i = 0; i < sys->noncommuting_count(); ++i)
    if (!support || (*support)[i]) letters.push_back(i);
  const int k = static_cast<int>(letters.size());
  IntMatrix c(k, std::vector<long long>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) c[a][b] = sys->c(letters[a], letters[b]);
  SkewNormalForm snf = skew_normal_form(c);
  const int m = static_cast<int>(snf.blocks.size());
  const int order = field.order;
  rep.dim = 1;
  for (int i = 0; i < m; ++i) rep.dim *= order;

  std::vector<FpMat> basis;
  for (int b = 0; b < k; ++b) {
    if (b < 2 * m) {
      int slot = b / 2;
      bool is_u = b % 2 == 0;
      basis.push_back(clock_shift(m, order, slot, snf.blocks[slot], is_u ? 1 : 0, is_u ? 0 : 1, field));
    } else {
      basis.push_back(FpMat::scalar(rep.dim, random_nonzero(rng, field.p), field.p));
    }
  }
  for (int a = 0; a < k; ++a) {
    FpMat g = FpMat::scalar(rep.dim, random_nonzero(rng, field.p), field.p);
    for (int b = 0; b < k; ++b)
      if (snf.e[b][a] != 0) g = g * basis[b].power(snf.e[b][a]);
    rep.gens[letters[a]] = std::move(g);
  }
  for (int i = sys->noncommuting_count(); i < sys->size(); ++i)
    if (!support || (*support)[i])
      rep.gens[i] = FpMat::scalar(rep.dim, random_nonzero(rng, field.p), field.p);
  if (!satisfies_relations(rep))
    throw std::logic_error("constructed representation violates the commutation relations");
  return rep;
}

Representation commutative_sample(const SystemPtr& sys, const PrimeField& field, std::uint64_t seed) {
  Representation rep;
  rep.sys = sys;
  rep.field = field;
  rep.field.order = 1;
  rep.field.zeta = 1;
  rep.seed = seed;
  rep.dim = 1;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < sys->size(); ++i)
    rep.gens.emplace_back(FpMat::scalar(1, random_nonzero(rng, field.p), field.p));
  return rep;
}

bool satisfies_relations(const Representation& rep) {
  const auto& sys = *rep.sys;
  for (int i = 0; i < sys.size(); ++i) {
    if (!rep.gens[i]) continue;
    for (int j = 0; j < i; ++j) {
      if (!rep.gens[j]) continue;
      const FpMat& gi = *rep.gens[i];
      const FpMat& gj = *rep.gens[j];
      if (!(gi * gj == (gj * gi).scaled(rep.field.qpow(sys.c(i, j))))) return false;
    }
  }
  return true;
}

namespace {

struct Evaluator {
  const Representation& rep;
  std::unordered_map<const void*, FpMat> memo;

  FpMat gen_power(int i, int e) {
    const auto& g = rep.gens[i];
    if (!g) throw std::invalid_argument("generator '" + rep.sys->name(i) + "' is not represented");
    return g->power(e);
  }

  FpMat run(const Expr& e) {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
    FpMat r;
    switch (e.kind()) {
      case Expr::Kind::Monomial: {
        const Monomial& m = e.mono();
        u32 c = m.is_zero() ? 0 : static_cast<u32>(
                                      static_cast<u64>(rep.field.reduce(m.scalar)) * rep.field.qpow(m.qpow) % rep.field.p);
        r = FpMat::scalar(rep.dim, c, rep.field.p);
        if (c != 0)
          for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] != 0) r = r * gen_power(static_cast<int>(i), m.exps[i]);
        break;
      }
      case Expr::Kind::Sum: {
        r = run(e.children()[0]);
        for (std::size_t i = 1; i < e.children().size(); ++i) r = r + run(e.children()[i]);
        break;
      }
      case Expr::Kind::Prod: {
        r = run(e.children()[0]);
        for (std::size_t i = 1; i < e.children().size(); ++i) r = r * run(e.children()[i]);
        break;
      }
      case Expr::Kind::Inv:
        r = run(e.children()[0]).inverse();
        break;
    }
    memo.emplace(e.id(), r);
    return r;
  }
};

}  // namespace

FpMat evaluate(const Expr& e, const Representation& rep) {
  if (e.system_ptr().get() != rep.sys.get())
    throw std::invalid_argument("expression and representation use different systems");
  Evaluator ev{rep, {}};
  return ev.run(e);
}

}  // namespace qweyl::oracle

#include "qweyl/expression.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace qweyl {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_monomial(const Monomial& m) {
  std::size_t h = std::hash<long>()(m.qpow);
  h = mix(h, static_cast<std::size_t>(mpz_get_si(m.scalar.get_num_mpz_t())));
  h = mix(h, static_cast<std::size_t>(mpz_get_si(m.scalar.get_den_mpz_t())));
  for (int e : m.exps) h = mix(h, static_cast<std::size_t>(e + 1000003));
  return h;
}

void check_same(const SystemPtr& a, const SystemPtr& b) {
  if (a.get() != b.get()) throw AlgebraError("expressions belong to different generator systems");
}

}  // namespace

Expr Expr::monomial(SystemPtr sys, Monomial m) {
  if (m.exps.size() != static_cast<std::size_t>(sys->size()))
    throw AlgebraError("monomial exponent vector has wrong length");
  if (m.is_zero()) m = Monomial::zero(*sys);
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Monomial;
  n->hash = mix(1, hash_monomial(m));
  n->mono = std::move(m);
  n->sys = std::move(sys);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Monomial& Expr::mono() const { return node_->mono; }
const std::vector<Expr>& Expr::children() const { return node_->kids; }
const GeneratorSystem& Expr::system() const { return *node_->sys; }
const SystemPtr& Expr::system_ptr() const { return node_->sys; }
std::size_t Expr::hash() const { return node_->hash; }

bool Expr::is_zero() const { return is_monomial() && mono().is_zero(); }

bool Expr::is_one() const {
  return is_monomial() && mono().scalar == 1 && mono().qpow == 0 && mono().is_scalar();
}

std::size_t Expr::node_count() const {
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> stack{this};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    for (const auto& k : e->children()) stack.push_back(&k);
  }
  return seen.size();
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  if (a.is_monomial()) return a.mono() == b.mono();
  const auto& ka = a.children();
  const auto& kb = b.children();
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!structurally_equal(ka[i], kb[i])) return false;
  return true;
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) throw AlgebraError("empty sum");
  SystemPtr sys = terms.front().system_ptr();
  std::vector<Expr> flat;
  for (auto& t : terms) {
    check_same(sys, t.system_ptr());
    if (t.kind() == Kind::Sum)
      flat.insert(flat.end(), t.children().begin(), t.children().end());
    else
      flat.push_back(t);
  }
  // combine monomials with equal letters and q-power; keep first-seen order
  std::vector<Expr> out;
  std::vector<Monomial> monos;
  std::vector<int> slot;
  for (auto& t : flat) {
    if (!t.is_monomial()) {
      out.push_back(t);
      slot.push_back(-1);
      continue;
    }
    const Monomial& m = t.mono();
    if (m.is_zero()) continue;
    bool merged = false;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i].qpow == m.qpow && monos[i].exps == m.exps) {
        monos[i].scalar += m.scalar;
        merged = true;
        break;
      }
    if (!merged) {
      slot.push_back(static_cast<int>(monos.size()));
      monos.push_back(m);
      out.push_back(t);
    }
  }
  std::vector<Expr> kids;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (slot[i] < 0) {
      kids.push_back(out[i]);
    } else if (!monos[slot[i]].is_zero()) {
      kids.push_back(monos[slot[i]] == out[i].mono() ? out[i] : monomial(sys, monos[slot[i]]));
    }
  }
  if (kids.empty()) return monomial(sys, Monomial::zero(*sys));
  if (kids.size() == 1) return kids.front();
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Sum;
  n->sys = sys;
  std::size_t h = 2;
  for (auto& k : kids) h = mix(h, k.hash());
  n->hash = h;
  n->kids = std::move(kids);
  return Expr(std::move(n));
}

Expr Expr::prod(std::vector<Expr> factors) {
  if (factors.empty()) throw AlgebraError("empty product");
  SystemPtr sys = factors.front().system_ptr();
  const GeneratorSystem& g = *sys;
  std::vector<Expr> flat;
  for (auto& f : factors) {
    check_same(sys, f.system_ptr());
    if (f.kind() == Kind::Prod)
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    else
      flat.push_back(f);
  }
  Monomial acc = Monomial::unit(g);
  std::vector<Expr> stack;
  auto cancels = [](const Expr& x, const Expr& y) {
    if (x.kind() == Kind::Inv && structurally_equal(x.children()[0], y)) return true;
    if (y.kind() == Kind::Inv && structurally_equal(y.children()[0], x)) return true;
    return false;
  };
  for (auto& f : flat) {
    if (f.is_monomial()) {
      const Monomial& m = f.mono();
      if (m.is_zero()) return monomial(sys, Monomial::zero(g));
      if (m.is_central(g)) {
        acc = normal_order_product(acc, m, g);
        continue;
      }
      if (!stack.empty() && stack.back().is_monomial()) {
        Monomial r = normal_order_product(stack.back().mono(), m, g);
        stack.pop_back();
        if (r.is_central(g))
          acc = normal_order_product(acc, r, g);
        else
          stack.push_back(monomial(sys, std::move(r)));
        continue;
      }
      stack.push_back(f);
      continue;
    }
    if (!stack.empty() && cancels(stack.back(), f)) {
      stack.pop_back();
      continue;
    }
    stack.push_back(f);
  }
  if (stack.empty()) return monomial(sys, acc);
  bool acc_trivial = acc.scalar == 1 && acc.qpow == 0 && acc.is_scalar();
  if (!acc_trivial) {
    if (stack.front().is_monomial())
      stack.front() = monomial(sys, normal_order_product(acc, stack.front().mono(), g));
    else
      stack.insert(stack.begin(), monomial(sys, acc));
  }
  if (stack.size() == 1) return stack.front();
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Prod;
  n->sys = sys;
  std::size_t h = 3;
  for (auto& k : stack) h = mix(h, k.hash());
  n->hash = h;
  n->kids = std::move(stack);
  return Expr(std::move(n));
}

Expr Expr::inv(const Expr& e) {
  switch (e.kind()) {
    case Kind::Monomial:
      if (e.mono().is_zero()) throw AlgebraError("division by zero");
      return monomial(e.system_ptr(), inverse(e.mono(), e.system()));
    case Kind::Inv:
      return e.children()[0];
    case Kind::Prod: {
      std::vector<Expr> r;
      for (auto it = e.children().rbegin(); it != e.children().rend(); ++it) r.push_back(inv(*it));
      return prod(std::move(r));
    }
    case Kind::Sum:
      break;
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Inv;
  n->sys = e.system_ptr();
  n->hash = mix(4, e.hash());
  n->kids = {e};
  return Expr(std::move(n));
}

Expr constant(const SystemPtr& sys, const Rational& c) {
  return Expr::monomial(sys, Monomial::constant(*sys, c));
}

Expr qpower(const SystemPtr& sys, long k) {
  return Expr::monomial(sys, Monomial::constant(*sys, 1, k));
}

Expr generator(const SystemPtr& sys, int index, int power) {
  return Expr::monomial(sys, Monomial::generator(*sys, index, power));
}

Expr generator(const SystemPtr& sys, const std::string& name, int power) {
  return generator(sys, sys->require(name), power);
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a) { return Expr::prod({constant(a.system_ptr(), -1), a}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::prod({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::prod({a, Expr::inv(b)}); }
Expr operator*(const Rational& c, const Expr& a) { return constant(a.system_ptr(), c) * a; }
Expr operator+(const Rational& c, const Expr& a) { return constant(a.system_ptr(), c) + a; }
Expr operator+(const Expr& a, const Rational& c) { return a + constant(a.system_ptr(), c); }
Expr inv(const Expr& e) { return Expr::inv(e); }

Expr pow(const Expr& e, int k) {
  if (k == 0) return constant(e.system_ptr(), 1);
  if (k < 0) return inv(pow(e, -k));
  if (e.is_monomial()) return Expr::monomial(e.system_ptr(), power(e.mono(), k, e.system()));
  std::vector<Expr> f(static_cast<std::size_t>(k), e);
  return Expr::prod(std::move(f));
}

namespace {

Expr canon_rec(const Expr& e, std::unordered_map<const void*, Expr>& memo) {
  auto it = memo.find(e.id());
  if (it != memo.end()) return it->second;
  Expr r = e;
  switch (e.kind()) {
    case Expr::Kind::Monomial:
      break;
    case Expr::Kind::Inv:
      r = Expr::inv(canon_rec(e.children()[0], memo));
      break;
    case Expr::Kind::Prod: {
      std::vector<Expr> k;
      for (const auto& c : e.children()) k.push_back(canon_rec(c, memo));
      r = Expr::prod(std::move(k));
      break;
    }
    case Expr::Kind::Sum: {
      // fold structurally repeated non-monomial terms: X + X -> 2 X
      std::vector<Expr> k;
      std::vector<Rational> mult;
      for (const auto& c : e.children()) {
        Expr x = canon_rec(c, memo);
        Rational w = 1;
        if (x.kind() == Expr::Kind::Prod && x.children().front().is_monomial() &&
            x.children().front().mono().is_scalar() && x.children().front().mono().qpow == 0) {
          w = x.children().front().mono().scalar;
          std::vector<Expr> rest(x.children().begin() + 1, x.children().end());
          x = Expr::prod(std::move(rest));
        }
        bool found = false;
        if (!x.is_monomial())
          for (std::size_t i = 0; i < k.size(); ++i)
            if (structurally_equal(k[i], x)) {
              mult[i] += w;
              found = true;
              break;
            }
        if (!found) {
          k.push_back(x);
          mult.push_back(w);
        }
      }
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (mult[i] == 0) continue;
        terms.push_back(mult[i] == 1 ? k[i] : mult[i] * k[i]);
      }
      r = terms.empty() ? constant(e.system_ptr(), 0) : Expr::sum(std::move(terms));
      break;
    }
  }
  memo.emplace(e.id(), r);
  return r;
}

}  // namespace

Expr canonicalize_light(const Expr& e) {
  std::unordered_map<const void*, Expr> memo;
  return canon_rec(e, memo);
}

std::vector<bool> support(const Expr& e) {
  std::vector<bool> s(e.system().size(), false);
  std::unordered_set<const void*> seen;
  std::vector<Expr> stack{e};
  while (!stack.empty()) {
    Expr x = stack.back();
    stack.pop_back();
    if (!seen.insert(x.id()).second) continue;
    if (x.is_monomial()) {
      for (std::size_t i = 0; i < s.size(); ++i)
        if (x.mono().exps[i] != 0) s[i] = true;
    }
    for (const auto& k : x.children()) stack.push_back(k);
  }
  return s;
}

Endomorphism Endomorphism::identity(const SystemPtr& sys) {
  Endomorphism f;
  f.sys = sys;
  for (int i = 0; i < sys->size(); ++i) f.images.push_back(generator(sys, i));
  f.name = "id";
  return f;
}

Expr Endomorphism::operator()(const Expr& e) const { return substitute(e, *this); }

namespace {

Expr subst_rec(const Expr& e, const Endomorphism& phi, std::unordered_map<const void*, Expr>& memo) {
  auto it = memo.find(e.id());
  if (it != memo.end()) return it->second;
  const SystemPtr& sys = phi.sys;
  Expr r = e;
  switch (e.kind()) {
    case Expr::Kind::Monomial: {
      const Monomial& m = e.mono();
      if (m.is_zero()) {
        r = constant(sys, 0);
        break;
      }
      std::vector<Expr> f;
      f.push_back(Expr::monomial(sys, Monomial::constant(*sys, m.scalar, m.qpow)));
      const int n = static_cast<int>(m.exps.size());
      for (int k = 0; k < n; ++k) {
        int i = phi.anti ? n - 1 - k : k;
        if (m.exps[i] != 0) f.push_back(pow(phi.images[i], m.exps[i]));
      }
      r = Expr::prod(std::move(f));
      break;
    }
    case Expr::Kind::Inv:
      r = Expr::inv(subst_rec(e.children()[0], phi, memo));
      break;
    case Expr::Kind::Prod: {
      std::vector<Expr> f;
      for (const auto& c : e.children()) f.push_back(subst_rec(c, phi, memo));
      if (phi.anti) std::reverse(f.begin(), f.end());
      r = Expr::prod(std::move(f));
      break;
    }
    case Expr::Kind::Sum: {
      std::vector<Expr> t;
      for (const auto& c : e.children()) t.push_back(subst_rec(c, phi, memo));
      r = Expr::sum(std::move(t));
      break;
    }
  }
  memo.emplace(e.id(), r);
  return r;
}

}  // namespace

Expr substitute(const Expr& e, const Endomorphism& phi) {
  if (e.system_ptr().get() != phi.sys.get())
    throw AlgebraError("substitution across different generator systems");
  if (phi.images.size() != static_cast<std::size_t>(phi.sys->size()))
    throw AlgebraError("endomorphism must give an image for every generator");
  std::unordered_map<const void*, Expr> memo;
  return subst_rec(e, phi, memo);
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  Endomorphism r;
  r.sys = f.sys;
  r.anti = f.anti != g.anti;
  r.name = f.name + "*" + g.name;
  std::unordered_map<const void*, Expr> memo;
  for (const auto& img : g.images) r.images.push_back(subst_rec(img, f, memo));
  return r;
}

}  // namespace qweyl

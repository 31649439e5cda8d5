#include <random>

#include "doctest.h"
#include "qweyl/series/gaussian.hpp"
#include "qweyl/series/identity.hpp"
#include "qweyl/series/named_identities.hpp"

using namespace qweyl;
using namespace qweyl::series;

namespace {

SystemPtr pair_system() { return GeneratorSystem::make({"F", "G"}, {{0, 1}, {-1, 0}}, {"a", "b"}); }

// q-series of q^{j(j-1)/2} / ((1-q)...(1-q^j)) by direct expansion
std::vector<Coeff> euler_term(int j, int prec) {
  std::vector<Coeff> r(prec, 0);
  if (j * (j - 1) / 2 < prec) r[j * (j - 1) / 2] = 1;
  for (int i = 1; i <= j; ++i)
    for (int k = i; k < prec; ++k) r[k] += r[k - i];
  return r;
}

bool agree(const GradedSeries& x, const GradedSeries& y) {
  for (const auto& [k, s] : x.terms()) {
    QSeries t = y.coefficient(k);
    int p = std::min(s.prec, t.prec);
    for (int e = std::min(s.lo, t.lo); e < p && e < std::max(s.hi(), t.hi()); ++e)
      if (s.at(e) != t.at(e)) return false;
  }
  for (const auto& [k, t] : y.terms()) {
    QSeries s = x.coefficient(k);
    int p = std::min(s.prec, t.prec);
    for (int e = std::min(s.lo, t.lo); e < p && e < std::max(s.hi(), t.hi()); ++e)
      if (s.at(e) != t.at(e)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pochhammer of a F^-1 stabilizes in the central grading") {
  auto sys = pair_system();
  auto ctx = make_context(sys);
  const int cmax = 3, cap = 12;
  Monomial x = make_monomial(*sys, {{"a", 1}, {"F", -1}});
  GradedSeries p = GradedSeries::pochhammer(ctx, cmax, cap, x, 1);
  CHECK(p.terms().size() == 4);
  for (int j = 0; j <= cmax; ++j) {
    Monomial xj = make_monomial(*sys, {{"a", j}, {"F", -j}});
    QSeries c = p.coefficient(Key::from(xj.exps));
    auto want = euler_term(j, cap);
    for (int k = 0; k < cap; ++k) CHECK(c.at(k) == want[k]);
  }
}

TEST_CASE("expansions without positive central degree do not converge") {
  auto sys = pair_system();
  auto ctx = make_context(sys);
  Monomial f = make_monomial(*sys, {{"F", 1}}, 1);
  CHECK_THROWS_AS(GradedSeries::pochhammer(ctx, 4, 10, f, 1), NonConvergent);
  CHECK_THROWS_AS(GradedSeries::one_plus_inverse(ctx, 4, 10, f), NonConvergent);
  IdentityParams p;
  Monomial one = make_monomial(*sys, {});
  CHECK_THROWS_AS(verify_identity(sys, {psi_factor(one, make_monomial(*sys, {{"F", 1}}))}, {}, p), NonConvergent);
}

TEST_CASE("conjugation through a Gaussian sum agrees with termwise reordering") {
  auto sys = GeneratorSystem::make({"F1", "F2"}, {{0, -2}, {2, 0}}, {"a"});
  auto ctx = make_context(sys);
  for (int d : {1, 2}) {
    for (int s : {-1, 0, 3}) {
      Gaussian g{Key::from({0, 1, 0}), d, s, 1};
      for (int p : {1, 2, -1}) {
        Monomial x = make_monomial(*sys, {{"F1", p}});
        const long w = sys->omega(x.exps, {0, 1, 0});
        if (w % d != 0) continue;
        KeyedMonomial img = conjugate_monomial(*ctx, {0, Key::from(x.exps)}, g);
        // X G = G (G^{-1} X G): compare q-exponents of X L^n against L^m * image
        for (int n = -3; n <= 3; ++n) {
          Monomial ln = power(make_monomial(*sys, {{"F2", 1}}), n, *sys);
          Monomial lhs = normal_order_product(x, ln, *sys);
          long lhs_q = lhs.qpow + static_cast<long>(d) * n * (n + 1) / 2 + static_cast<long>(s) * n;
          Monomial im = make_monomial(*sys, {});
          im.exps = img.key.to_vector(3);
          im.qpow = img.qpow;
          int m = n + static_cast<int>(w / d);
          Monomial lm = power(make_monomial(*sys, {{"F2", 1}}), m, *sys);
          Monomial rhs = normal_order_product(lm, im, *sys);
          long rhs_q = rhs.qpow + static_cast<long>(d) * m * (m + 1) / 2 + static_cast<long>(s) * m;
          CHECK(lhs.exps == rhs.exps);
          CHECK(lhs_q == rhs_q);
        }
        Gaussian gi = g;
        gi.power = -1;
        KeyedMonomial back = conjugate_monomial(*ctx, img, gi);
        CHECK(back.key == Key::from(x.exps));
        CHECK(back.qpow == 0);
      }
    }
  }
}

TEST_CASE("graded ring axioms and truncation coherence") {
  auto sys = pair_system();
  auto ctx = make_context(sys);
  std::mt19937_64 rng(5);
  auto random = [&](int cmax, int cap) {
    GradedSeries s = GradedSeries::one(ctx, cmax, cap);
    for (int i = 0; i < 2; ++i) {
      Monomial m = make_monomial(*sys, {{"F", static_cast<int>(rng() % 3) - 1}, {"G", static_cast<int>(rng() % 3) - 1},
                                        {rng() % 2 ? "a" : "b", 1}},
                                 static_cast<long>(rng() % 3));
      s = s * (rng() % 2 ? GradedSeries::pochhammer(ctx, cmax, cap, m, 1)
                         : GradedSeries::one_plus_inverse(ctx, cmax, cap, m));
    }
    return s;
  };
  for (int t = 0; t < 40; ++t) {
    auto state = rng();
    rng.seed(state);
    GradedSeries a = random(4, 10), b = random(4, 10), c = random(4, 10);
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    rng.seed(state);
    GradedSeries a2 = random(6, 16), b2 = random(6, 16), c2 = random(6, 16);
    GradedSeries big = ((a2 * b2) * c2).projected(10, 4);
    GradedSeries small = (a * b) * c;
    CHECK(agree(big, small.projected(10, 4)));
  }
}

TEST_CASE("positive Gaussian word coefficients match brute force") {
  auto sys = GeneratorSystem::make({"F0", "F1"}, {{0, -1}, {1, 0}}, {});
  auto ctx = make_context(sys);
  GaussianWord w = {{Key::from({1, 0}), 1, 0, 1}, {Key::from({0, 1}), 1, 0, 1}, {Key::from({1, 0}), 1, 0, 1}};
  const int qmax = 10;
  for (int e0 = -2; e0 <= 2; ++e0)
    for (int e1 = -2; e1 <= 2; ++e1) {
      std::map<int, Coeff> got;
      REQUIRE(gaussian_word_coefficients(*ctx, w, {e0, e1}, qmax, got));
      std::map<int, Coeff> want;
      for (int n1 = -12; n1 <= 12; ++n1) {
        int n2 = e1;
        int n3 = e0 - n1;
        Monomial m = make_monomial(*sys, {});
        long q = 0;
        for (auto [letter, n] : {std::pair{"F0", n1}, std::pair{"F1", n2}, std::pair{"F0", n3}}) {
          m = normal_order_product(m, power(make_monomial(*sys, {{letter, 1}}), n, *sys), *sys);
          q += static_cast<long>(n) * (n + 1) / 2;
        }
        q += m.qpow;
        if (q < qmax) want[static_cast<int>(q)] += 1;
      }
      CHECK(got == want);
    }
}

TEST_CASE("psi times its inverse is one in the graded engine") {
  auto sys = pair_system();
  auto ctx = make_context(sys);
  Monomial a = make_monomial(*sys, {{"a", 1}}), f = make_monomial(*sys, {{"F", 1}});
  GradedSeries one = graded_product(ctx, {psi_factor(a, f), psi_inverse_factor(a, f)}, 8, 5);
  CHECK(one.min_precision() >= 8);
  for (const auto& [k, s] : one.terms()) {
    if (k == Key{}) {
      CHECK(s.at(0) == 1);
      CHECK(s.valuation() == 0);
      for (int e = 1; e < 8; ++e) CHECK(s.at(e) == 0);
    } else {
      CHECK(s.c.empty());
    }
  }
}

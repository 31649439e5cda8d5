#include <random>

#include "doctest.h"
#include "qweyl/monomial.hpp"

using namespace qweyl;

namespace {

SystemPtr a2_system() {
  return GeneratorSystem::make({"F0", "F1", "F2"}, {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
                               {"a0", "a1", "a2"});
}

// Bubble-sorts a word of letters (with signed unit powers) using only the
// pairwise rule g_i g_j = q^{C_ij} g_j g_i; independent of beta().
long bubble_qpow(std::vector<std::pair<int, int>> word, const GeneratorSystem& sys) {
  long q = 0;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      auto [i, si] = word[k];
      auto [j, sj] = word[k + 1];
      if (i > j) {
        q += static_cast<long>(si) * sj * sys.c(i, j);
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
  }
  return q;
}

std::vector<std::pair<int, int>> spell(const Monomial& m) {
  std::vector<std::pair<int, int>> w;
  for (int i = 0; i < static_cast<int>(m.exps.size()); ++i)
    for (int k = 0; k < std::abs(m.exps[i]); ++k) w.push_back({i, m.exps[i] > 0 ? 1 : -1});
  return w;
}

Monomial random_monomial(std::mt19937_64& rng, const GeneratorSystem& sys) {
  Monomial m = Monomial::unit(sys);
  for (auto& e : m.exps) e = static_cast<int>(rng() % 7) - 3;
  m.qpow = static_cast<long>(rng() % 5) - 2;
  m.scalar = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
  m.scalar.canonicalize();
  if (m.scalar == 0) m.scalar = 1;
  return m;
}

}  // namespace

TEST_CASE("normal_order_product matches a bubble-sort reordering") {
  auto sys = a2_system();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Monomial a = random_monomial(rng, *sys), b = random_monomial(rng, *sys);
    Monomial p = normal_order_product(a, b, *sys);
    auto w = spell(a);
    auto wb = spell(b);
    w.insert(w.end(), wb.begin(), wb.end());
    CHECK(p.qpow == a.qpow + b.qpow + bubble_qpow(w, *sys));
    CHECK(p.scalar == a.scalar * b.scalar);
  }
}

TEST_CASE("monomial product is associative with unit and inverses") {
  auto sys = a2_system();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Monomial a = random_monomial(rng, *sys), b = random_monomial(rng, *sys),
             c = random_monomial(rng, *sys);
    CHECK(normal_order_product(normal_order_product(a, b, *sys), c, *sys) ==
          normal_order_product(a, normal_order_product(b, c, *sys), *sys));
    CHECK(normal_order_product(a, Monomial::unit(*sys), *sys) == a);
    CHECK(normal_order_product(a, inverse(a, *sys), *sys) == Monomial::unit(*sys));
    CHECK(normal_order_product(inverse(a, *sys), a, *sys) == Monomial::unit(*sys));
  }
}

TEST_CASE("F1 F0 reorders to q F0 F1") {
  auto sys = a2_system();
  Monomial f0 = Monomial::generator(*sys, 0), f1 = Monomial::generator(*sys, 1);
  Monomial p = normal_order_product(f1, f0, *sys);
  CHECK(p.qpow == 1);
  CHECK(p.exps == std::vector<int>{1, 1, 0, 0, 0, 0});
  Monomial r = normal_order_product(f0, f1, *sys);
  CHECK(r.qpow == 0);
}

TEST_CASE("two-generator commutation F G = q G F") {
  auto sys = GeneratorSystem::make({"F", "G"}, {{0, 1}, {-1, 0}}, {});
  Monomial f = Monomial::generator(*sys, 0), g = Monomial::generator(*sys, 1);
  Monomial fg = normal_order_product(f, g, *sys);
  Monomial gf = normal_order_product(g, f, *sys);
  CHECK(fg.qpow == 0);
  CHECK(gf.qpow == -1);
}

TEST_CASE("power and printer") {
  auto sys = a2_system();
  Monomial f1 = Monomial::generator(*sys, 1);
  Monomial f2 = Monomial::generator(*sys, 2);
  Monomial m = normal_order_product(f2, f1, *sys);
  Monomial m3 = power(m, 3, *sys);
  Monomial manual = normal_order_product(normal_order_product(m, m, *sys), m, *sys);
  CHECK(m3 == manual);
  CHECK(power(m, -2, *sys) == inverse(power(m, 2, *sys), *sys));
  CHECK(to_string(m, *sys) == "q*F1*F2");
  CHECK(to_string(Monomial::constant(*sys, Rational(-3, 2), 0), *sys) == "-3/2");
}

TEST_CASE("invalid systems are rejected") {
  CHECK_THROWS_AS(GeneratorSystem({"F", "G"}, {{0, 1}, {1, 0}}, {}), AlgebraError);
  CHECK_THROWS_AS(GeneratorSystem({"F", "F"}, {{0, 1}, {-1, 0}}, {}), AlgebraError);
  CHECK_THROWS_AS(GeneratorSystem({"q"}, {{0}}, {}), AlgebraError);
}

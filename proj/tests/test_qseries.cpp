#include <map>
#include <random>

#include "doctest.h"
#include "qweyl/series/qseries.hpp"

using namespace qweyl::series;

namespace {

// naive truncated product on exponent maps
std::map<int, Coeff> naive_times(const QSeries& a, const QSeries& b, int prec) {
  std::map<int, Coeff> r;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      int k = a.lo + static_cast<int>(i) + b.lo + static_cast<int>(j);
      if (k < prec) r[k] += a.c[i] * b.c[j];
    }
  return r;
}

QSeries random_series(std::mt19937_64& rng, bool exact) {
  QSeries s;
  s.lo = static_cast<int>(rng() % 7) - 3;
  int len = static_cast<int>(rng() % 6) + 1;
  for (int i = 0; i < len; ++i) s.c.push_back(static_cast<Coeff>(rng() % 7) - 3);
  s.prec = exact ? kExact : s.lo + len + static_cast<int>(rng() % 4);
  s.normalize();
  return s;
}

// equal below the smaller of the two precisions
bool agree(const QSeries& a, const QSeries& b) {
  int p = std::min(a.prec, b.prec);
  for (int k = std::min(a.lo, b.lo); k < std::min(p, std::max(a.hi(), b.hi())); ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

}  // namespace

TEST_CASE("monomials and precision bookkeeping") {
  QSeries m = QSeries::monomial(3, 2);
  CHECK(m.at(2) == 3);
  CHECK(m.valuation() == 2);
  CHECK(m.is_exact());
  QSeries t = QSeries::monomial(5, 7, 4);
  CHECK(t.c.empty());
  CHECK(t.prec == 4);
  CHECK(QSeries::exact_zero().is_exact_zero());
  CHECK(!QSeries::zero_to(3).is_exact_zero());
}

TEST_CASE("product precision is min(Pa + vb, Pb + va)") {
  QSeries a = QSeries::monomial(1, 0);
  a.add(QSeries::monomial(1, 1));
  a.truncate(5);
  QSeries b = QSeries::monomial(2, 3);
  QSeries p = a.times(b);
  CHECK(p.prec == 8);
  CHECK(p.at(3) == 2);
  CHECK(p.at(4) == 2);
  QSeries c = QSeries::monomial(1, -2, 6);
  CHECK(a.times(c).prec == 3);
}

TEST_CASE("addition takes the smaller precision and cancels") {
  QSeries a = QSeries::monomial(1, 1);
  QSeries b = QSeries::monomial(1, 1, 6);
  a.add(b, -1);
  CHECK(a.c.empty());
  CHECK(a.prec == 6);
}

TEST_CASE("products agree with a naive convolution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    QSeries a = random_series(rng, trial % 3 == 0), b = random_series(rng, trial % 2 == 0);
    QSeries p = a.times(b);
    auto ref = naive_times(a, b, p.prec);
    for (int k = -10; k < std::min(p.prec, 20); ++k) {
      Coeff want = ref.count(k) ? ref[k] : 0;
      CHECK(p.at(k) == want);
    }
  }
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    QSeries a = random_series(rng, false), b = random_series(rng, true), c = random_series(rng, false);
    CHECK(agree(a.times(b).times(c), a.times(b.times(c))));
    QSeries bc = b;
    bc.add(c);
    QSeries left = a.times(bc);
    QSeries right = a.times(b);
    right.add(a.times(c));
    CHECK(agree(left, right));
    CHECK(a.times(b) == b.times(a));
  }
}

TEST_CASE("overflow is reported") {
  QSeries a = QSeries::monomial(INT64_MAX / 2 + 1, 0);
  CHECK_THROWS_AS(a.times(QSeries::monomial(2, 0)), std::overflow_error);
}

TEST_CASE("shift moves exponents and precision") {
  QSeries a = QSeries::monomial(1, 0, 3);
  a.shift(-2);
  CHECK(a.at(-2) == 1);
  CHECK(a.prec == 1);
}

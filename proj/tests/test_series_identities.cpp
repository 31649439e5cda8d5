#include "doctest.h"
#include "qweyl/series/named_identities.hpp"

using namespace qweyl;
using namespace qweyl::series;

namespace {

IdentityReport run(const NamedIdentity& id) { return verify_identity(id.sys, id.lhs, id.rhs, id.params); }

}  // namespace

TEST_CASE("pentagon identity to (8,8)") {
  auto r = run(pentagon_identity());
  CHECK(r.holds);
  CHECK(r.complete);
  CHECK(r.discrepancies.empty());
}

TEST_CASE("rank-two dilogarithm identity to (8,8)") {
  auto r = run(dilog_identity());
  CHECK(r.holds);
  CHECK(r.gaussian_check == "conjugation+coefficients");
}

TEST_CASE("B2 product identity to (4,4)") {
  auto r = run(b2_identity());
  CHECK(r.holds);
  CHECK(r.gaussian_check == "conjugation+coefficients");
}

TEST_CASE("G2 product identity to (4,4)") {
  auto r = run(g2_identity());
  CHECK(r.holds);
  CHECK(r.gaussian_check == "conjugation");
  CHECK(!r.notes.empty());
}

TEST_CASE("perturbed identities fail with witnesses") {
  for (const auto& id : {pentagon_swapped_control(), dilog_swapped_control(), b2_swapped_control(),
                         one_step_ratio_wrong_shift_control()}) {
    CAPTURE(id.id);
    auto r = run(id);
    CHECK(!r.holds);
    CHECK(r.complete);
    CHECK(!r.discrepancies.empty());
    CHECK(r.discrepancy_count >= r.discrepancies.size());
  }
}

TEST_CASE("a perturbation visible only in the bodies is caught") {
  auto id = dilog_identity(6, 6);
  const auto& s = *id.sys;
  // same Gaussian word, central parameters of the outer factors exchanged
  id.lhs[0].a = make_monomial(s, {{"y", 1}});
  id.lhs[2].a = make_monomial(s, {{"x", 1}});
  auto r = run(id);
  CHECK(!r.holds);
  CHECK(r.discrepancies.front().part == "body");
}

TEST_CASE("suite lists identities before controls") {
  auto all = series_identities();
  REQUIRE(all.size() == 10);
  for (std::size_t i = 0; i < 6; ++i) CHECK(all[i].expect_holds);
  for (std::size_t i = 6; i < all.size(); ++i) CHECK(!all[i].expect_holds);
}

TEST_CASE("higher truncation agrees with the default one") {
  auto r = run(b2_identity(6, 5));
  CHECK(r.holds);
}

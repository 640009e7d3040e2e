#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "basn/core.hpp"
#include "basn/extensions.hpp"
#include "basn/math.hpp"
#include "support.hpp"

using namespace basn;

TEST_CASE("built-in quadrature audit passes") {
  const auto entries = extensions_self_check();
  REQUIRE(entries.size() == 5);
  for (const auto& e : entries) {
    INFO(e.family);
    CHECK(e.pass);
    CHECK(e.max_rel_err <= 1e-6);
  }
}

TEST_CASE("bivariate normalizer and density") {
  CHECK(bbasn2_norm_constant({1.0, 1.0, 0.5}) == doctest::Approx(55.0).epsilon(1e-13));
  CHECK(bbasn2_norm_constant({2.0, -1.0, -0.3}) == doctest::Approx(168.92).epsilon(1e-13));
  CHECK(bbasn2_pdf(0.0, 0.0, {1.0, 1.0, 0.5}) ==
        doctest::Approx(0.013365548979922232).epsilon(1e-13));
  CHECK(bbasn2_pdf(1.0, -1.0, {1.0, 1.0, 0.5}) ==
        doctest::Approx(0.001808830356810595).epsilon(1e-13));
  CHECK(bbasn2_pdf(1.0, 1.0, {2.0, -1.0, -0.3}) ==
        doctest::Approx(0.0002366996819069989).epsilon(1e-13));
  CHECK_THROWS_AS(bbasn2_pdf(0.0, 0.0, {1.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(bbasn2_norm_constant({1.0, 1.0, -1.2}), std::domain_error);
}

TEST_CASE("bivariate symmetry under coordinate swap") {
  const BivariateParams p{1.3, -0.4, 0.25};
  const BivariateParams swapped{-0.4, 1.3, 0.25};
  for (double z1 : {-1.0, 0.3, 2.0})
    for (double z2 : {-0.5, 0.0, 1.7})
      CHECK(bbasn2_pdf(z1, z2, p) == doctest::Approx(bbasn2_pdf(z2, z1, swapped))
                                         .epsilon(1e-13));
}

TEST_CASE("bivariate with independent flat second margin factorizes") {
  // alpha2 = 0, rho = 0: the z2 margin carries no tilt weight of its own, so
  // the density is the shared quartic tilt in (z1+... ) structure; check the
  // known special case alpha1 = 0 too, which collapses to the product of
  // standard normals times the shared tilt at s = 0.
  const BivariateParams p0{0.0, 0.0, 0.0};
  for (double z1 : {-1.0, 0.5})
    for (double z2 : {0.2, 1.4})
      CHECK(bbasn2_pdf(z1, z2, p0) ==
            doctest::Approx(normal_pdf(z1) * normal_pdf(z2)).epsilon(1e-13));
}

TEST_CASE("bivariate large-alpha limit") {
  // alpha1 = alpha2 = A, rho = 0: density -> (z1+z2)^4 phi(z1) phi(z2) / 12
  const double A = 1e4;
  for (double z1 : {-1.0, 0.5, 1.5})
    for (double z2 : {-0.5, 1.0}) {
      const double lim = std::pow(z1 + z2, 4) * normal_pdf(z1) * normal_pdf(z2) / 12.0;
      CHECK(std::fabs(bbasn2_pdf(z1, z2, {A, A, 0.0}) - lim) < 1e-3);
    }
}

TEST_CASE("two-shape normalizer and density") {
  CHECK(tpbasn2_norm_constant({1.0, 1.0}) == doctest::Approx(1137.0).epsilon(1e-13));
  CHECK(tpbasn2_norm_constant({1.0, -0.5}) == doctest::Approx(38.8125).epsilon(1e-13));
  CHECK(tpbasn2_norm_constant({-0.5, 1.0}) == doctest::Approx(38.8125).epsilon(1e-13));
  CHECK(tpbasn2_pdf(1.0, {1.0, -0.5}) ==
        doctest::Approx(0.065850325996353021).epsilon(1e-13));
  CHECK(tpbasn2_pdf(0.5, {1.0, 1.0}) ==
        doctest::Approx(0.00075596700894516537).epsilon(1e-13));
  CHECK(tpbasn2_pdf(0.0, {1.0, 1.0}) ==
        doctest::Approx(0.0056139634884986129).epsilon(1e-13));
}

TEST_CASE("two-shape swap symmetry and base case") {
  for (double z : {-2.0, -0.3, 0.9})
    CHECK(tpbasn2_pdf(z, {1.4, -0.6}) ==
          doctest::Approx(tpbasn2_pdf(z, {-0.6, 1.4})).epsilon(1e-13));
  for (double z : {-1.5, 0.0, 2.0})
    CHECK(tpbasn2_pdf(z, {1.2, 0.0}) == doctest::Approx(basn2_pdf(z, 1.2)).epsilon(1e-13));
}

TEST_CASE("two-shape large-alpha limit") {
  // both shapes large: density -> z^8 phi(z) / 105
  const double A = 1e4;
  for (double z : {-2.0, -1.0, 0.5, 1.5}) {
    const double lim = std::pow(z, 8) * normal_pdf(z) / 105.0;
    CHECK(std::fabs(tpbasn2_pdf(z, {A, A}) - lim) < 1e-3);
  }
  const double mass =
      support::integrate([A](double z) { return tpbasn2_pdf(z, {A, A}); }, -14.0, 14.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cubic-tilt normalizer and density") {
  CHECK(babsn2_norm_constant({1.0, 1.0}) == doctest::Approx(15048.0).epsilon(1e-13));
  CHECK(babsn2_norm_constant({1.0, 0.5}) == doctest::Approx(1378.6875).epsilon(1e-13));
  CHECK(babsn2_norm_constant({0.5, 0.25}) == doctest::Approx(101.54296875).epsilon(1e-13));
  CHECK(babsn2_pdf(1.0, {1.0, 1.0}) ==
        doctest::Approx(6.4319703487278934e-5).epsilon(1e-12));
  CHECK(babsn2_pdf(0.0, {0.5, 0.25}) ==
        doctest::Approx(0.015715210430123757).epsilon(1e-13));
}

TEST_CASE("cubic-tilt reflection and base case") {
  for (double z : {-1.5, -0.2, 0.8, 2.1})
    CHECK(babsn2_pdf(-z, {-1.0, -0.5}) ==
          doctest::Approx(babsn2_pdf(z, {1.0, 0.5})).epsilon(1e-13));
  for (double z : {-1.0, 0.0, 1.3})
    CHECK(babsn2_pdf(z, {0.7, 0.0}) == doctest::Approx(basn2_pdf(z, 0.7)).epsilon(1e-13));
}

TEST_CASE("cubic-tilt large-beta limit") {
  // beta dominant: density -> z^12 phi(z) / 10395
  const double B = 1e4;
  for (double z : {-2.0, 1.0, 2.5}) {
    const double lim = std::pow(z, 12) * normal_pdf(z) / 10395.0;
    CHECK(std::fabs(babsn2_pdf(z, {0.0, B}) - lim) < 1e-3);
  }
}

TEST_CASE("hidden-truncation normalizer and density") {
  CHECK(gbasn2_norm_constant({1.0, 1.0}) ==
        doctest::Approx(2.4222937480701934).epsilon(1e-13));
  CHECK(gbasn2_norm_constant({1.0, 0.0}) == doctest::Approx(7.5).epsilon(1e-13));
  CHECK(gbasn2_norm_constant({2.0, -1.0}) ==
        doctest::Approx(69.081100010292302).epsilon(1e-13));
  CHECK(gbasn2_norm_constant({0.5, 3.0}) ==
        doctest::Approx(1.1824771145697288).epsilon(1e-13));
  CHECK(gbasn2_norm_constant({-1.5, 2.0}) ==
        doctest::Approx(33.473345128714111).epsilon(1e-13));
  CHECK(gbasn2_pdf(1.0, {1.0, 1.0}) ==
        doctest::Approx(0.084044636592390957).epsilon(1e-13));
  CHECK(gbasn2_pdf(0.0, {1.0, 0.0}) ==
        doctest::Approx(0.10638460810704871).epsilon(1e-13));
}

TEST_CASE("hidden truncation with zero slant reduces to the base density") {
  for (double a : {-1.0, 0.5, 2.0})
    for (double z : {-2.0, 0.0, 1.5})
      CHECK(gbasn2_pdf(z, {a, 0.0}) == doctest::Approx(basn2_pdf(z, a)).epsilon(1e-13));
}

TEST_CASE("hidden truncation integrates to one") {
  for (const auto& p : {GenParams{1.0, 1.0}, GenParams{2.0, -1.0}, GenParams{0.5, 3.0}}) {
    const double mass =
        support::integrate([&p](double z) { return gbasn2_pdf(z, p); }, -14.0, 14.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("log-scale density") {
  CHECK(lbasn2_pdf(1.0, 1.0) == doctest::Approx(0.10638460810704871).epsilon(1e-13));
  CHECK(lbasn2_pdf(std::exp(1.0), 0.0) ==
        doctest::Approx(0.089016054915951472).epsilon(1e-13));
  for (double z : {0.1, 0.5, 2.0, 7.0})
    CHECK(lbasn2_pdf(z, 1.0) ==
          doctest::Approx(basn2_pdf(std::log(z), 1.0) / z).epsilon(1e-13));
  for (double a : {0.0, 1.0, -2.0}) {
    const double mass = support::integrate(
        [a](double z) { return lbasn2_pdf(z, a); }, 1e-12, 2000.0, 1e-10);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(lbasn2_pdf(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lbasn2_pdf(-1.0, 1.0), std::domain_error);
}

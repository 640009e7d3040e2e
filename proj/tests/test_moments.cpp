#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "basn/core.hpp"
#include "basn/moments.hpp"
#include "support.hpp"

using namespace basn;

namespace {
const std::vector<double> kAlphas = {-5.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0};
}

TEST_CASE("both moment routes agree") {
  for (double a : kAlphas)
    for (int n = 0; n <= 16; ++n) {
      const double m1 = raw_moment(n, a);
      const double m2 = raw_moment_gamma(n, a);
      CHECK(m1 == doctest::Approx(m2).epsilon(1e-13));
    }
}

TEST_CASE("moments match quadrature") {
  for (double a : {-2.0, -0.5, 0.0, 1.0, 3.0})
    for (int n = 0; n <= 8; ++n) {
      const double quad = support::integrate(
          [n, a](double z) { return std::pow(z, n) * basn2_pdf(z, a); }, -14.0, 14.0);
      CHECK(raw_moment(n, a) == doctest::Approx(quad).epsilon(1e-8));
    }
}

TEST_CASE("low-order closed forms") {
  for (double a : kAlphas) {
    const double a2 = a * a;
    const double mean = -4.0 * a / (2.0 + a2);
    const double m2 = 5.0 - 4.0 / (2.0 + a2) - 4.0 / (2.0 + 3.0 * a2);
    const double var = (2.0 + 5.0 * a2) * (4.0 + 3.0 * a2 * a2) /
                       ((2.0 + a2) * (2.0 + a2) * (2.0 + 3.0 * a2));
    const double m3 = -12.0 * a * (2.0 + 5.0 * a2) / (4.0 + 8.0 * a2 + 3.0 * a2 * a2);
    const double m4 = 35.0 - 48.0 / (2.0 + a2) - 16.0 / (2.0 + 3.0 * a2);
    CHECK(raw_moment(1, a) == doctest::Approx(mean).epsilon(1e-12));
    CHECK(raw_moment(2, a) == doctest::Approx(m2).epsilon(1e-12));
    CHECK(raw_moment(3, a) == doctest::Approx(m3).epsilon(1e-12));
    CHECK(raw_moment(4, a) == doctest::Approx(m4).epsilon(1e-12));
    CHECK(shape_summary(a).variance == doctest::Approx(var).epsilon(1e-12));
  }
  CHECK(raw_moment(1, 1.0) == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
  CHECK(raw_moment(2, 1.0) == doctest::Approx(43.0 / 15.0).epsilon(1e-14));
  CHECK(raw_moment(3, 1.0) == doctest::Approx(-5.6).epsilon(1e-14));
  CHECK(raw_moment(4, 1.0) == doctest::Approx(15.8).epsilon(1e-14));
  CHECK_THROWS_AS(raw_moment(17, 1.0), std::domain_error);
  CHECK_THROWS_AS(raw_moment(-1, 1.0), std::domain_error);
}

TEST_CASE("shape summary at alpha zero is standard normal") {
  const auto s = shape_summary(0.0);
  CHECK(s.mean == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.variance == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.beta1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.beta2 == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("skewness sign is opposite to alpha") {
  for (double a : {0.3, 1.0, 2.0, 5.0}) {
    CHECK(signed_skewness(a) < 0.0);
    CHECK(signed_skewness(-a) > 0.0);
    CHECK(signed_skewness(a) == doctest::Approx(-signed_skewness(-a)).epsilon(1e-13));
    CHECK(signed_skewness(a) * signed_skewness(a) ==
          doctest::Approx(shape_summary(a).beta1).epsilon(1e-12));
  }
  CHECK(signed_skewness(0.0) == 0.0);
}

TEST_CASE("shape quantities are even in alpha except the mean") {
  for (double a : {0.5, 1.0, 2.0}) {
    const auto p = shape_summary(a);
    const auto m = shape_summary(-a);
    CHECK(p.mean == doctest::Approx(-m.mean).epsilon(1e-14));
    CHECK(p.variance == doctest::Approx(m.variance).epsilon(1e-14));
    CHECK(p.beta1 == doctest::Approx(m.beta1).epsilon(1e-13));
    CHECK(p.beta2 == doctest::Approx(m.beta2).epsilon(1e-13));
  }
}

TEST_CASE("extremal mean") {
  const auto b = extremal_bounds(ShapeQuantity::mean);
  const double r2 = std::sqrt(2.0);
  CHECK(b.min == doctest::Approx(-r2).epsilon(1e-6));
  CHECK(b.max == doctest::Approx(r2).epsilon(1e-6));
  CHECK(b.argmin == doctest::Approx(r2).epsilon(1e-4));
  CHECK(b.argmax == doctest::Approx(-r2).epsilon(1e-4));
  CHECK(b.min_attained);
  CHECK(b.max_attained);
}

TEST_CASE("extremal variance") {
  const auto b = extremal_bounds(ShapeQuantity::variance);
  CHECK(b.min == doctest::Approx(0.97207160811598473).epsilon(1e-8));
  CHECK(std::fabs(b.argmin) == doctest::Approx(0.615753903443).epsilon(1e-4));
  CHECK(b.min_attained);
  // sup is 5, approached only as |alpha| -> inf
  CHECK(b.max == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(!b.max_attained);
}

TEST_CASE("extremal squared skewness") {
  const auto b = extremal_bounds(ShapeQuantity::beta1);
  CHECK(b.max == doctest::Approx(2.5359351042769957).epsilon(1e-8));
  CHECK(std::fabs(b.argmax) == doctest::Approx(1.62978327716).epsilon(1e-4));
  CHECK(b.max_attained);
  CHECK(b.min == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("extremal kurtosis") {
  const auto b = extremal_bounds(ShapeQuantity::beta2);
  CHECK(b.max == doctest::Approx(6.7653838486857879).epsilon(1e-8));
  CHECK(std::fabs(b.argmax) == doctest::Approx(1.29689002703).epsilon(1e-4));
  CHECK(b.max_attained);
  // the infimum 1.4 is the quartic-bimodal-normal limit, not attained
  CHECK(b.min == doctest::Approx(1.4).epsilon(1e-6));
  CHECK(!b.min_attained);
}

TEST_CASE("mgf frozen values") {
  CHECK(basn2_mgf(0.5, 1.0) == doctest::Approx(0.60906729352341915).epsilon(1e-13));
  CHECK(scbasn2_mgf(0.5, 1.0) == doctest::Approx(1.4022712106701976).epsilon(1e-13));
  for (double a : kAlphas) CHECK(basn2_mgf(0.0, a) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(basn2_mgf(41.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(basn2_mgf(-41.0, 1.0), std::domain_error);
}

TEST_CASE("mgf matches quadrature") {
  for (double a : {-1.0, 0.0, 0.75, 2.0})
    for (double t : {-1.0, -0.25, 0.5, 1.5}) {
      const double quad = support::integrate(
          [t, a](double z) { return std::exp(t * z) * basn2_pdf(z, a); }, -14.0, 14.0);
      CHECK(basn2_mgf(t, a) == doctest::Approx(quad).epsilon(1e-8));
    }
}

TEST_CASE("mgf derivatives reproduce the moments") {
  for (double a : {-1.0, 0.5, 2.0}) {
    const double h = 1e-5;
    const double d1 = (basn2_mgf(h, a) - basn2_mgf(-h, a)) / (2.0 * h);
    const double d2 = (basn2_mgf(h, a) - 2.0 + basn2_mgf(-h, a)) / (h * h);
    CHECK(d1 == doctest::Approx(raw_moment(1, a)).epsilon(1e-5));
    CHECK(d2 == doctest::Approx(raw_moment(2, a)).epsilon(1e-4));
  }
}

TEST_CASE("even part of the mgf is the symmetric-component mgf") {
  for (double a : {0.5, 1.0, 2.0})
    for (double t : {0.25, 0.8, 1.6}) {
      const double even = 0.5 * (basn2_mgf(t, a) + basn2_mgf(-t, a));
      CHECK(even == doctest::Approx(scbasn2_mgf(t, a)).epsilon(1e-13));
    }
}

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "basn/math.hpp"
#include "support.hpp"

using namespace basn;

TEST_CASE("standard normal pdf") {
  CHECK(normal_pdf(0.0) == doctest::Approx(kInvSqrt2Pi).epsilon(1e-15));
  CHECK(normal_pdf(1.0) == doctest::Approx(0.24197072451914335).epsilon(1e-15));
  CHECK(normal_pdf(-1.0) == normal_pdf(1.0));
  CHECK(std::exp(log_normal_pdf(3.5)) == doctest::Approx(normal_pdf(3.5)).epsilon(1e-14));
  CHECK(log_normal_pdf(40.0) == doctest::Approx(-800.0 - kLogSqrt2Pi).epsilon(1e-15));
}

TEST_CASE("standard normal cdf and complement") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.0) == doctest::Approx(0.84134474606854293).epsilon(1e-15));
  CHECK(normal_ccdf(1.0) == doctest::Approx(1.0 - 0.84134474606854293).epsilon(1e-14));
  for (double z = -8.0; z <= 8.0; z += 0.25)
    CHECK(normal_cdf(z) + normal_ccdf(z) == doctest::Approx(1.0).epsilon(1e-14));
  // erfc-based right tail keeps relative accuracy far out
  CHECK(normal_ccdf(10.0) ==
        doctest::Approx(7.6198530241605945e-24).epsilon(1e-13).scale(0.0));
  CHECK(normal_cdf(-10.0) ==
        doctest::Approx(7.6198530241605945e-24).epsilon(1e-13).scale(0.0));
}

TEST_CASE("log normal cdf stable in the left tail") {
  CHECK(log_normal_cdf(0.0) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(std::exp(log_normal_cdf(-2.0)) == doctest::Approx(normal_cdf(-2.0)).epsilon(1e-13));
  const double lp40 = log_normal_cdf(-40.0);
  CHECK(std::isfinite(lp40));
  // Mills-ratio asymptotic: log Phi(-z) ~ -z^2/2 - log z - log sqrt(2 pi)
  const double asym = -800.0 - std::log(40.0) - kLogSqrt2Pi;
  CHECK(lp40 == doctest::Approx(asym).epsilon(1e-3));
  CHECK(lp40 < -800.0);
}

TEST_CASE("normal quantile inverts the cdf") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.9599639845400545).epsilon(1e-13));
  for (double p : {1e-10, 1e-4, 0.01, 0.2, 0.5, 0.8, 0.99, 1.0 - 1e-4}) {
    CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
  }
  for (double z = -6.0; z <= 4.5; z += 0.5)
    CHECK(normal_quantile(normal_cdf(z)) == doctest::Approx(z).epsilon(1e-11));
  // beyond ~4.5 the double spacing of p near 1 caps the round-trip accuracy
  for (double z : {5.0, 5.5, 6.0})
    CHECK(std::fabs(normal_quantile(normal_cdf(z)) - z) < 1e-6);
}

TEST_CASE("odd double factorial") {
  CHECK(odd_double_factorial(-1) == 1.0);
  CHECK(odd_double_factorial(1) == 1.0);
  CHECK(odd_double_factorial(3) == 3.0);
  CHECK(odd_double_factorial(5) == 15.0);
  CHECK(odd_double_factorial(7) == 105.0);
  CHECK(odd_double_factorial(11) == 10395.0);
}

TEST_CASE("compensated sum recovers cancelled terms") {
  const std::vector<double> xs = {1e16, 1.0, -1e16};
  CHECK(compensated_sum(xs) == 1.0);
  const std::vector<double> empty;
  CHECK(compensated_sum(empty) == 0.0);
  std::vector<double> many(1000, 0.1);
  CHECK(compensated_sum(many) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("pdf integrates to one") {
  const double mass = support::integrate([](double z) { return normal_pdf(z); }, -12.0, 12.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("argument checks") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(detail::check_alpha(nan), std::domain_error);
  CHECK_THROWS_AS(detail::check_alpha(std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(detail::check_finite(nan, "x"), std::domain_error);
  CHECK_NOTHROW(detail::check_alpha(0.0));
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(odd_double_factorial(-3), std::domain_error);
}

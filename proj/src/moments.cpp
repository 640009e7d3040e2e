#include "basn/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "basn/math.hpp"
#include "basn/core.hpp"

namespace basn {

namespace {

void check_order(int n) {
  if (n < 0 || n > 16) throw std::domain_error("raw_moment: order must be in [0, 16]");
}

// E[X^k] for X ~ N(0,1), even k, as (k-1)!!.
double normal_even_moment(int k) { return odd_double_factorial(k - 1); }

// Same via 2^{k/2} Gamma((k+1)/2)/sqrt(pi).
double normal_even_moment_gamma(int k) {
  return std::exp2(0.5 * k) * std::tgamma(0.5 * (k + 1)) / std::sqrt(std::numbers::pi);
}

double assemble_moment(int n, double alpha, double (*m)(int)) {
  const double a2 = alpha * alpha;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  if (n % 2 == 0) return (a2 * a2 * m(n + 4) + 8.0 * a2 * m(n + 2) + 4.0 * m(n)) / d;
  return (-4.0 * a2 * alpha * m(n + 3) - 8.0 * alpha * m(n + 1)) / d;
}

}  // namespace

double raw_moment(int n, double alpha) {
  detail::check_alpha(alpha);
  check_order(n);
  return assemble_moment(n, alpha, normal_even_moment);
}

double raw_moment_gamma(int n, double alpha) {
  detail::check_alpha(alpha);
  check_order(n);
  return assemble_moment(n, alpha, normal_even_moment_gamma);
}

ShapeSummary shape_summary(double alpha) {
  detail::check_alpha(alpha);
  const double m1 = raw_moment(1, alpha);
  const double m2 = raw_moment(2, alpha);
  const double m3 = raw_moment(3, alpha);
  const double m4 = raw_moment(4, alpha);
  const double mu2 = m2 - m1 * m1;
  const double mu3 = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
  const double mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
  return {m1, mu2, mu3 * mu3 / (mu2 * mu2 * mu2), mu4 / (mu2 * mu2)};
}

double signed_skewness(double alpha) {
  const ShapeSummary s = shape_summary(alpha);
  const double g = std::sqrt(s.beta1);
  return alpha > 0.0 ? -g : g;
}

namespace {

double quantity_value(ShapeQuantity q, double alpha) {
  switch (q) {
    case ShapeQuantity::mean: return -4.0 * alpha / (2.0 + alpha * alpha);
    case ShapeQuantity::variance: {
      const double a2 = alpha * alpha;
      return (2.0 + 5.0 * a2) * (4.0 + 3.0 * a2 * a2) /
             ((2.0 + a2) * (2.0 + a2) * (2.0 + 3.0 * a2));
    }
    case ShapeQuantity::beta1: return shape_summary(alpha).beta1;
    case ShapeQuantity::beta2: return shape_summary(alpha).beta2;
  }
  throw std::logic_error("unreachable");
}

double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      bool maximize, int iters = 200) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  for (int i = 0; i < iters && b - a > 1e-12 * (1.0 + std::fabs(a)); ++i) {
    const bool left = maximize ? f(c) > f(d) : f(c) < f(d);
    if (left) b = d; else a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

ExtremalBounds extremal_bounds(ShapeQuantity quantity) {
  const double limit = 1e6;
  auto f = [quantity](double a) { return quantity_value(quantity, a); };

  // Coarse scan: dense near zero, log-spaced to the boundary. Every quantity
  // here settles monotonically well before |alpha| = 1e3.
  std::vector<double> grid;
  for (double a = -10.0; a <= 10.0 + 1e-12; a += 1.0 / 64.0) grid.push_back(a);
  for (double m = 16.0; m <= limit; m *= 2.0) {
    grid.push_back(m);
    grid.push_back(-m);
  }
  grid.push_back(limit);
  grid.push_back(-limit);
  std::sort(grid.begin(), grid.end());

  ExtremalBounds out{};
  double best_min = f(grid.front()), best_max = best_min;
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v < best_min) { best_min = v; imin = i; }
    if (v > best_max) { best_max = v; imax = i; }
  }
  auto polish = [&](std::size_t i, bool maximize, double& val, double& arg, bool& attained) {
    const double lo = grid[i > 0 ? i - 1 : i];
    const double hi = grid[i + 1 < grid.size() ? i + 1 : i];
    arg = golden_section(f, lo, hi, maximize);
    val = f(arg);
    attained = std::fabs(arg) < limit * 0.999;
    if (!attained) arg = grid[i];  // supremum approached along |alpha| -> inf
  };
  polish(imin, false, out.min, out.argmin, out.min_attained);
  polish(imax, true, out.max, out.argmax, out.max_attained);
  return out;
}

namespace {

double mgf_guard(double t) {
  if (!(std::fabs(t) <= 40.0)) throw std::domain_error("mgf: |t| must be <= 40");
  return std::exp(0.5 * t * t);
}

}  // namespace

double basn2_mgf(double t, double alpha) {
  detail::check_alpha(alpha);
  const double mx = mgf_guard(t);
  const double a = alpha, a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  const double poly = a4 * t * t * t * t + 6.0 * a4 * t * t + 3.0 * a4 - 4.0 * a3 * t * t * t -
                      12.0 * a3 * t + 8.0 * a2 * t * t + 8.0 * a2 - 8.0 * a * t + 4.0;
  return mx * poly / d;
}

double scbasn2_mgf(double t, double alpha) {
  detail::check_alpha(alpha);
  const double mx = mgf_guard(t);
  const double a2 = alpha * alpha, a4 = a2 * a2;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  const double poly = a4 * t * t * t * t + 6.0 * a4 * t * t + 3.0 * a4 + 8.0 * a2 * t * t +
                      8.0 * a2 + 4.0;
  return mx * poly / d;
}

}  // namespace basn

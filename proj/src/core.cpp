#include "basn/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "basn/math.hpp"

namespace basn {

NormConstants norm_constants(double alpha) {
  detail::check_alpha(alpha);
  const double a2 = alpha * alpha;
  return {3.0 - 4.0 / (2.0 + a2), (2.0 + a2) * (2.0 + 3.0 * a2)};
}

double bn_pdf(double z, int n) {
  if (n < 0 || n % 2 != 0 || n > 32) throw std::domain_error("bn_pdf: n must be even in [0, 32]");
  if (n == 0) return normal_pdf(z);
  return std::pow(z, n) * normal_pdf(z) / odd_double_factorial(n - 1);
}

double bn4_cdf(double z) {
  const double f = normal_cdf(z) - z * (3.0 + z * z) * normal_pdf(z) / 3.0;
  return std::clamp(f, 0.0, 1.0);
}

double basn2_pdf(double z, double alpha) {
  detail::check_alpha(alpha);
  const double u = 1.0 - alpha * z;
  if (std::fabs(u) > 1e150) return std::exp(basn2_logpdf(z, alpha));
  const double a2 = alpha * alpha;
  const double q = (u * u + 1.0) / (2.0 + a2);  // grouped to keep huge alpha finite
  const double c2 = 3.0 - 4.0 / (2.0 + a2);
  return q * q * normal_pdf(z) / c2;
}

double basn2_logpdf(double z, double alpha) {
  detail::check_alpha(alpha);
  const double u = 1.0 - alpha * z;
  const double u2 = u * u;
  // quartic factor >= 1, so the log never diverges for finite z
  const double lq = std::isfinite(u2) ? std::log1p(u2) : 2.0 * std::log(std::fabs(u));
  const double a2 = alpha * alpha;
  return 2.0 * lq - std::log(2.0 + a2) - std::log(2.0 + 3.0 * a2) + log_normal_pdf(z);
}

double basn2_cdf(double z, double alpha) {
  detail::check_alpha(alpha);
  const double a = alpha, a2 = a * a;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  const double bracket = 8.0 - 8.0 * a * z + 4.0 * a2 * (2.0 + z * z) - a2 * a * z * (3.0 + z * z);
  const double f = normal_cdf(z) + a * bracket * normal_pdf(z) / d;
  return std::clamp(f, 0.0, 1.0);
}

double scbasn2_pdf(double z, double alpha) {
  detail::check_alpha(alpha);
  const double a2 = alpha * alpha;
  const double z2 = z * z;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  return (a2 * a2 * z2 * z2 + 8.0 * a2 * z2 + 4.0) * normal_pdf(z) / d;
}

double scbasn2_cdf(double z, double alpha) {
  detail::check_alpha(alpha);
  const double a2 = alpha * alpha;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  const double f = normal_cdf(z) - a2 * z * (a2 * (z * z + 3.0) + 8.0) * normal_pdf(z) / d;
  return std::clamp(f, 0.0, 1.0);
}

double basn2_asymmetric_part(double z, double alpha) {
  detail::check_alpha(alpha);
  const double a = alpha, a2 = a * a;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  return (-4.0 * a2 * a * z * z * z - 8.0 * a * z) * normal_pdf(z) / d;
}

double basn2_quantile(double p, double alpha) {
  detail::check_alpha(alpha);
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("basn2_quantile: p outside (0,1)");
  const double a2 = alpha * alpha;
  const double mean = -4.0 * alpha / (2.0 + a2);
  const double var = (2.0 + 5.0 * a2) * (4.0 + 3.0 * a2 * a2) /
                     ((2.0 + a2) * (2.0 + a2) * (2.0 + 3.0 * a2));
  const double spread = std::fabs(mean) + 6.0 * std::sqrt(var) + 1.0;
  const double z0 = normal_quantile(p);
  double lo = std::min(z0, mean) - spread;
  double hi = std::max(z0, mean) + spread;
  while (basn2_cdf(lo, alpha) > p) lo -= spread;
  while (basn2_cdf(hi, alpha) < p) hi += spread;

  double z = std::clamp(z0, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double err = basn2_cdf(z, alpha) - p;
    if (err > 0.0) hi = z; else lo = z;
    if (std::fabs(err) <= 1e-13 || hi - lo <= 1e-14 * (1.0 + std::fabs(z))) break;
    const double step = err / std::max(basn2_pdf(z, alpha), 1e-300);
    double next = z - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection safeguard
    z = next;
  }
  return z;
}

namespace detail {

double mode_cubic(double z, double alpha) {
  const double a = alpha;
  return ((a * a * z - 2.0 * a) * z + (2.0 - 4.0 * a * a)) * z + 4.0 * a;
}

void check_locscale(const LocScaleParams& p) {
  check_alpha(p.alpha);
  check_finite(p.mu, "mu");
  if (!(std::isfinite(p.sigma) && p.sigma > 0.0))
    throw std::domain_error("sigma must be finite and > 0");
}

namespace {

// Real roots of x^3 + a x^2 + b x + c (Numerical Recipes trigonometric form).
int cubic_real_roots(double a, double b, double c, double out[3]) {
  const double q = (a * a - 3.0 * b) / 9.0;
  const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
  const double q3 = q * q * q;
  if (r * r < q3) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
    const double m = -2.0 * std::sqrt(q);
    out[0] = m * std::cos(theta / 3.0) - a / 3.0;
    out[1] = m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0) - a / 3.0;
    out[2] = m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0) - a / 3.0;
    return 3;
  }
  const double big = -std::copysign(std::cbrt(std::fabs(r) + std::sqrt(r * r - q3)), r);
  out[0] = (big + (big != 0.0 ? q / big : 0.0)) - a / 3.0;
  return 1;
}

}  // namespace

}  // namespace detail

ModeReport basn2_mode_report(double alpha) {
  detail::check_alpha(alpha);
  if (alpha == 0.0) return {{0.0}, std::nullopt, 1};

  // Stationary points solve a^2 z^3 - 2a z^2 + (2 - 4a^2) z + 4a = 0.
  const double a2 = alpha * alpha;
  double roots[3];
  const int nroots = detail::cubic_real_roots(-2.0 / alpha, (2.0 - 4.0 * a2) / a2,
                                              4.0 / alpha, roots);
  std::vector<double> real(roots, roots + nroots);
  for (double& z : real) {  // polish against the unnormalized cubic
    for (int it = 0; it < 4; ++it) {
      const double f = detail::mode_cubic(z, alpha);
      const double df = (3.0 * a2 * z - 4.0 * alpha) * z + (2.0 - 4.0 * a2);
      if (df == 0.0) break;
      const double step = f / df;
      if (std::fabs(step) > 0.5 * (1.0 + std::fabs(z))) break;  // near-degenerate root
      z -= step;
    }
  }
  std::sort(real.begin(), real.end());

  ModeReport rep{{}, std::nullopt, 0};
  for (std::size_t i = 0; i < real.size(); ++i) {
    const double z = real[i];
    if (i > 0 && std::fabs(z - real[i - 1]) < 1e-9 * (1.0 + std::fabs(z))) continue;
    // pdf' has the opposite sign of the cubic: - -> + marks a maximum.
    const double h = 1e-4 * (1.0 + std::fabs(z));
    const double before = detail::mode_cubic(z - h, alpha);
    const double after = detail::mode_cubic(z + h, alpha);
    if (before < 0.0 && after > 0.0) rep.modes.push_back(z);
    else if (before > 0.0 && after < 0.0) rep.antimode = z;
  }
  rep.count = static_cast<int>(rep.modes.size());
  return rep;
}

double locscale_pdf(double y, const LocScaleParams& p) {
  detail::check_locscale(p);
  return basn2_pdf((y - p.mu) / p.sigma, p.alpha) / p.sigma;
}

double locscale_logpdf(double y, const LocScaleParams& p) {
  detail::check_locscale(p);
  return basn2_logpdf((y - p.mu) / p.sigma, p.alpha) - std::log(p.sigma);
}

double locscale_cdf(double y, const LocScaleParams& p) {
  detail::check_locscale(p);
  return basn2_cdf((y - p.mu) / p.sigma, p.alpha);
}

double locscale_quantile(double prob, const LocScaleParams& p) {
  detail::check_locscale(p);
  return p.mu + p.sigma * basn2_quantile(prob, p.alpha);
}

}  // namespace basn

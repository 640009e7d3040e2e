#include "basn/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "basn/core.hpp"
#include "basn/math.hpp"

namespace basn {

namespace detail {

double half_norm_constant(double alpha) {
  const double a = alpha, a2 = a * a;
  const double b = kSqrt2OverPi;
  return 3.0 * a2 * a2 - 8.0 * a2 * a * b + 8.0 * a2 - 8.0 * a * b + 4.0;
}

namespace {

void check_t(double t) {
  if (!(t >= 0.0)) throw std::domain_error("lifetime: t must be >= 0");
}

// Upper-tail mass of the unnormalized full-line density. Written with the
// complementary cdf so the result stays relatively accurate deep in the tail;
// computing d minus the lower cdf would cancel to noise once Phi(z) rounds
// to 1 and turn the hazard into jitter there.
double unnormalized_tail(double z, double alpha) {
  const double a = alpha, a2 = a * a;
  const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
  const double bracket = 8.0 - 8.0 * a * z + 4.0 * a2 * (2.0 + z * z) - a2 * a * z * (3.0 + z * z);
  return d * normal_ccdf(z) - a * bracket * normal_pdf(z);
}

}  // namespace

}  // namespace detail

double hbasn2_pdf(double t, double alpha) {
  detail::check_alpha(alpha);
  detail::check_t(t);
  const double u = 1.0 - alpha * t;
  const double q = u * u + 1.0;
  return q * q * 2.0 * normal_pdf(t) / detail::half_norm_constant(alpha);
}

double hbasn2_survival(double t, double alpha) {
  detail::check_alpha(alpha);
  detail::check_t(t);
  const double s = 2.0 * detail::unnormalized_tail(t, alpha) / detail::half_norm_constant(alpha);
  return std::clamp(s, 0.0, 1.0);
}

double hbasn2_hazard(double t, double alpha) {
  const double f = hbasn2_pdf(t, alpha);
  const double s = hbasn2_survival(t, alpha);
  if (s <= 0.0) return std::numeric_limits<double>::infinity();
  return f / s;
}

HazardShape hazard_shape(double alpha, double t_max) {
  detail::check_alpha(alpha);
  if (!(t_max > 0.0)) throw std::domain_error("hazard_shape: t_max must be > 0");
  const int kPoints = 2000;
  HazardShape out{HazardPattern::other, {}};
  out.grid_evidence.reserve(kPoints + 1);
  for (int i = 0; i <= kPoints; ++i) {
    const double t = t_max * i / kPoints;
    out.grid_evidence.emplace_back(t, hbasn2_hazard(t, alpha));
  }

  // Finite-difference slope signs; changes below 1e-9 count as flat.
  int n_down_up = 0, n_up_down = 0;
  int sign = 0;
  bool monotone_up = true;
  for (int i = 1; i <= kPoints; ++i) {
    const double dh = out.grid_evidence[i].second - out.grid_evidence[i - 1].second;
    if (std::fabs(dh) <= 1e-9) continue;
    const int s = dh > 0.0 ? 1 : -1;
    if (s < 0) monotone_up = false;
    if (sign == -1 && s == 1) ++n_down_up;
    if (sign == 1 && s == -1) ++n_up_down;
    sign = s;
  }
  if (monotone_up) out.shape = HazardPattern::increasing;
  else if (n_down_up == 1 && n_up_down == 0 && sign == 1) out.shape = HazardPattern::bathtub;
  return out;
}

}  // namespace basn

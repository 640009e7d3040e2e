#pragma once

#include <optional>
#include <vector>

// The standard family: a quartic polynomial tilt ((1-alpha*z)^2+1)^2 of the
// normal density, its symmetric component, the BN(n) bimodal-normal limit
// family, and the location-scale wrapper.
//
// All functions are pure; alpha must be finite (std::domain_error otherwise).
namespace basn {

struct NormConstants {
  double c2;  // 3 - 4/(2+alpha^2), in [1, 3)
  double d;   // c2*(2+alpha^2)^2 = (2+alpha^2)*(2+3*alpha^2) = 4+8a^2+3a^4
};

NormConstants norm_constants(double alpha);

// Bimodal normal BN(n): z^n phi(z)/(n-1)!!; n even, 0 <= n <= 32.
double bn_pdf(double z, int n);
double bn4_cdf(double z);

double basn2_pdf(double z, double alpha);
double basn2_logpdf(double z, double alpha);
double basn2_cdf(double z, double alpha);
// Inverse cdf; |cdf(result) - p| <= 1e-10. p in (0,1) or std::domain_error.
double basn2_quantile(double p, double alpha);

// Symmetric component: (a^4 z^4 + 8 a^2 z^2 + 4) phi(z)/d.
double scbasn2_pdf(double z, double alpha);
double scbasn2_cdf(double z, double alpha);
// Odd component, so that basn2_pdf = scbasn2_pdf + asymmetric part.
double basn2_asymmetric_part(double z, double alpha);

struct ModeReport {
  std::vector<double> modes;       // sorted strict local maxima
  std::optional<double> antimode;  // interior local minimum when bimodal
  int count;                       // modes.size(), 1 or 2
};

ModeReport basn2_mode_report(double alpha);

struct LocScaleParams {
  double alpha;
  double mu;
  double sigma;  // > 0
};

double locscale_pdf(double y, const LocScaleParams& p);
double locscale_logpdf(double y, const LocScaleParams& p);
double locscale_cdf(double y, const LocScaleParams& p);
double locscale_quantile(double prob, const LocScaleParams& p);

namespace detail {
void check_locscale(const LocScaleParams& p);  // finite, sigma > 0
// Mode-structure cubic a^2 z^3 - 2 a z^2 + (2-4a^2) z + 4a; the pdf derivative
// is -cubic(z) times a positive factor.
double mode_cubic(double z, double alpha);
}  // namespace detail

}  // namespace basn

#pragma once

#include <utility>
#include <vector>

// Lifetime variant: the standard density truncated to [0, inf) and rescaled,
// with survival, hazard, and a hazard-shape classifier.
namespace basn {

double hbasn2_pdf(double t, double alpha);
double hbasn2_survival(double t, double alpha);
// pdf/survival; returns +inf once survival underflows (t beyond ~12).
double hbasn2_hazard(double t, double alpha);

enum class HazardPattern { increasing, bathtub, other };

struct HazardShape {
  HazardPattern shape;
  std::vector<std::pair<double, double>> grid_evidence;  // (t, h(t)) samples
};

// Classifies h on a 2000-point grid of [0, t_max]: monotone nondecreasing ->
// increasing; decreasing then increasing with one interior minimum -> bathtub;
// anything else -> other.
HazardShape hazard_shape(double alpha, double t_max);

namespace detail {
// Normalizer 3a^4 - 8a^3 b + 8a^2 - 8ab + 4 with b = sqrt(2/pi).
double half_norm_constant(double alpha);
}  // namespace detail

}  // namespace basn

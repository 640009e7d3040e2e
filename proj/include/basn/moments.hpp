#pragma once

// Closed-form raw moments, shape summaries, the mgf, and numeric extrema of
// the shape quantities over alpha.
namespace basn {

struct ShapeSummary {
  double mean;
  double variance;
  double beta1;  // Pearson squared skewness, >= 0
  double beta2;  // Pearson kurtosis
};

// E[Z^n] via the even/odd double-factorial branches; 0 <= n <= 16.
double raw_moment(int n, double alpha);
// Same moment assembled from the Gamma-function form; cross-check route.
double raw_moment_gamma(int n, double alpha);

ShapeSummary shape_summary(double alpha);
// gamma1 = sign(-alpha) * sqrt(beta1); beta1 loses the sign by squaring.
double signed_skewness(double alpha);

enum class ShapeQuantity { mean, variance, beta1, beta2 };

struct ExtremalBounds {
  double min, max;
  double argmin, argmax;
  bool min_attained, max_attained;  // false when the extremum is an |alpha|->inf limit
};

// Numeric optimization of the closed-form quantity over alpha in [-1e6, 1e6].
ExtremalBounds extremal_bounds(ShapeQuantity quantity);

// Mgf with the degree-3 coefficient -12 a^3 t (the value consistent with the
// series derivation and the quadrature oracle). |t| <= 40.
double basn2_mgf(double t, double alpha);
double scbasn2_mgf(double t, double alpha);

}  // namespace basn

#pragma once

// Shared helpers for the unit tests: quadrature oracle, empirical-cdf
// distance, finite differences, and fixture paths.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace support {

template <typename F>
double integrate(F&& f, double lo, double hi, double tol = 1e-12) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(std::forward<F>(f), lo,
                                                                       hi, 12, tol);
}

// Kolmogorov-Smirnov distance between a sample and a cdf.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

template <typename F>
double central_diff(F&& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline std::string data_dir() {
#ifdef BASN_DATA_DIR
  return BASN_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string fixture(const std::string& name) { return data_dir() + "/" + name; }

inline bool file_exists(const std::string& path) { return std::filesystem::exists(path); }

}  // namespace support

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "basn/core.hpp"
#include "basn/sampling.hpp"

// Bulk kernels: grid evaluation, log-likelihood reduction, parallel sampling.
// Every kernel has a serial twin with identical arithmetic. Work is split
// into fixed blocks whose partial results are combined in block order, so the
// parallel output is bitwise equal to the serial one at any thread count; the
// bench tool measures the speedup.
namespace basn::batch {

inline constexpr std::size_t kReduceBlock = 4096;

std::vector<double> pdf_grid(std::span<const double> z, double alpha);
std::vector<double> pdf_grid_serial(std::span<const double> z, double alpha);

std::vector<double> cdf_grid(std::span<const double> z, double alpha);
std::vector<double> cdf_grid_serial(std::span<const double> z, double alpha);

// Sum of locscale_logpdf over y, block-compensated.
double loglik_sum(std::span<const double> y, const LocScaleParams& p);
double loglik_sum_serial(std::span<const double> y, const LocScaleParams& p);

// Same block/stream layout as sample_basn2, blocks filled concurrently.
std::vector<double> sample_basn2_parallel(double alpha, const SampleConfig& cfg,
                                          SampleStats* stats = nullptr);

// Max of basn2_pdf - delta*scbasn2_pdf over an n-point grid on [lo, hi];
// <= 0 certifies the rejection envelope on that grid.
double envelope_max_violation(double alpha, double delta, double lo, double hi, int n);

bool openmp_enabled();

}  // namespace basn::batch

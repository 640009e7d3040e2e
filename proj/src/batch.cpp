#include "basn/batch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "basn/math.hpp"

namespace basn::batch {

namespace {

// Per-block Neumaier sum; blocks combined in index order afterwards, which
// keeps the reduction independent of the number of threads.
template <typename Fn>
double blocked_sum(std::size_t n, [[maybe_unused]] bool parallel, Fn term) {
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t end = std::min(begin + kReduceBlock, n);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double x = term(i);
      const double t = sum + x;
      comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    partial[static_cast<std::size_t>(b)] = sum + comp;
  }
  return compensated_sum(partial);
}

template <typename Fn>
std::vector<double> map_grid(std::span<const double> z, [[maybe_unused]] bool parallel, Fn fn) {
  std::vector<double> out(z.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(z.size()); ++i)
    out[static_cast<std::size_t>(i)] = fn(z[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<double> pdf_grid(std::span<const double> z, double alpha) {
  return map_grid(z, true, [alpha](double x) { return basn2_pdf(x, alpha); });
}

std::vector<double> pdf_grid_serial(std::span<const double> z, double alpha) {
  return map_grid(z, false, [alpha](double x) { return basn2_pdf(x, alpha); });
}

std::vector<double> cdf_grid(std::span<const double> z, double alpha) {
  return map_grid(z, true, [alpha](double x) { return basn2_cdf(x, alpha); });
}

std::vector<double> cdf_grid_serial(std::span<const double> z, double alpha) {
  return map_grid(z, false, [alpha](double x) { return basn2_cdf(x, alpha); });
}

double loglik_sum(std::span<const double> y, const LocScaleParams& p) {
  detail::check_locscale(p);
  return blocked_sum(y.size(), true, [&](std::size_t i) { return locscale_logpdf(y[i], p); });
}

double loglik_sum_serial(std::span<const double> y, const LocScaleParams& p) {
  detail::check_locscale(p);
  return blocked_sum(y.size(), false, [&](std::size_t i) { return locscale_logpdf(y[i], p); });
}

std::vector<double> sample_basn2_parallel(double alpha, const SampleConfig& cfg,
                                          SampleStats* stats) {
  detail::check_alpha(alpha);
  detail::check_sample_config(cfg);
  const double delta = envelope_bound(alpha).delta;
  std::vector<double> out(cfg.n);
  const std::uint64_t nblocks = (cfg.n + kSampleBlock - 1) / kSampleBlock;
  std::vector<SampleStats> block_stats(nblocks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kSampleBlock;
    const std::uint64_t len = std::min<std::uint64_t>(kSampleBlock, cfg.n - begin);
    detail::sample_basn2_block(alpha, delta, cfg.seed, static_cast<std::uint64_t>(b),
                               {out.data() + begin, len}, block_stats[static_cast<std::size_t>(b)]);
  }
  if (stats)
    for (const auto& s : block_stats) {
      stats->proposals += s.proposals;
      stats->accepted += s.accepted;
    }
  return out;
}

double envelope_max_violation(double alpha, double delta, double lo, double hi, int n) {
  double worst = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (int i = 0; i < n; ++i) {
    const double z = lo + (hi - lo) * i / (n - 1);
    worst = std::max(worst, basn2_pdf(z, alpha) - delta * scbasn2_pdf(z, alpha));
  }
  return worst;
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace basn::batch

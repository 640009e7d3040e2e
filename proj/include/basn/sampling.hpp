#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "basn/core.hpp"

// Exact sampling for the symmetric component via a three-part mixture
// (normal : BN(2) : BN(4) with weights 4 : 8a^2 : 3a^4), and
// acceptance-rejection for the full density with a numerically certified
// envelope constant.
//
// Output is arranged in blocks of kSampleBlock values; block k is produced by
// RNG stream k (see rng.hpp for the splitting rule). The batch module's
// parallel sampler fills the same blocks concurrently, so serial and parallel
// paths are bit-identical.
namespace basn {

inline constexpr std::uint64_t kSampleBlock = 4096;

struct SampleConfig {
  std::uint64_t n;     // >= 1
  std::uint64_t seed;
};

struct EnvelopeInfo {
  double delta;                     // sup of pdf/proposal, >= 1, + 1e-9 safety
  double argmax_z;                  // location of the sup
  double acceptance_rate_expected;  // 1/delta
};

struct SampleStats {
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
};

EnvelopeInfo envelope_bound(double alpha);

std::vector<double> sample_scbasn2(double alpha, const SampleConfig& cfg,
                                   SampleStats* stats = nullptr);
std::vector<double> sample_basn2(double alpha, const SampleConfig& cfg,
                                 SampleStats* stats = nullptr);
std::vector<double> sample_locscale(const LocScaleParams& p, const SampleConfig& cfg,
                                    SampleStats* stats = nullptr);

namespace detail {
// Density ratio pdf/proposal as a function of w = alpha*z; peaks at w = -sqrt(2).
double envelope_ratio_w(double w);
// Fill one output block from its dedicated stream. delta from envelope_bound.
void sample_scbasn2_block(double alpha, std::uint64_t seed, std::uint64_t block,
                          std::span<double> out);
void sample_basn2_block(double alpha, double delta, std::uint64_t seed, std::uint64_t block,
                        std::span<double> out, SampleStats& stats);
void check_sample_config(const SampleConfig& cfg);
}  // namespace detail

}  // namespace basn

#pragma once

#include <cstdint>

// Seedable, version-stable generator stack. The uniform source is
// xoshiro256++ with its state filled by splitmix64; normal variates use the
// Marsaglia polar method and gamma variates the Marsaglia-Tsang squeeze.
// The only transcendental these paths need, log, is implemented in-repo so a
// given (seed, stream) reproduces bit-identical output on any IEEE-754
// platform regardless of the system math library.
//
// Stream splitting rule: stream k of seed s is seeded with
//   mix64(s) + k * 0x9E3779B97F4A7C15
// where mix64 is the splitmix64 output function. Documented and frozen; tests
// pin reference outputs.
namespace basn {

namespace detail {
std::uint64_t mix64(std::uint64_t x);  // splitmix64 finalizer
double portable_log(double x);         // <= 2 ulp of std::log, platform-free
}  // namespace detail

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  Xoshiro256pp(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_double();  // 53-bit uniform in [0, 1)
  double next_normal();  // standard normal, polar method
  double next_gamma(double shape);  // shape >= 1, unit scale

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace basn

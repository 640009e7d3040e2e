#include "basn/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace basn {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double portable_log(double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(x)) return x;
  int e;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    e -= 1;
  }
  // atanh series around 1; |s| <= sqrt(2)-1 over the reduced range.
  const double s = (m - 1.0) / (m + 1.0);
  const double s2 = s * s;
  const double p =
      2.0 * s *
      (1.0 + s2 * (1.0 / 3.0 +
                   s2 * (1.0 / 5.0 +
                         s2 * (1.0 / 7.0 +
                               s2 * (1.0 / 9.0 +
                                     s2 * (1.0 / 11.0 +
                                           s2 * (1.0 / 13.0 +
                                                 s2 * (1.0 / 15.0 +
                                                       s2 * (1.0 / 17.0 + s2 / 19.0)))))))));
  const double ln2_hi = 6.93147180369123816490e-01;
  const double ln2_lo = 1.90821492927058770002e-10;
  return (p + e * ln2_lo) + e * ln2_hi;
}

}  // namespace detail

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& w : s_) w = sm.next();
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed, std::uint64_t stream)
    : Xoshiro256pp(detail::mix64(seed) + stream * 0x9E3779B97F4A7C15ull) {}

std::uint64_t Xoshiro256pp::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

double Xoshiro256pp::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * detail::portable_log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

double Xoshiro256pp::next_gamma(double shape) {
  if (!(shape >= 1.0)) throw std::domain_error("next_gamma: shape must be >= 1");
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (detail::portable_log(u) < 0.5 * x2 + d * (1.0 - v + detail::portable_log(v)))
      return d * v;
  }
}

}  // namespace basn

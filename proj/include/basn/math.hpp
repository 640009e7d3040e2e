#pragma once

#include <cstddef>
#include <span>

// Scalar helpers shared by every module: standard-normal functions built on
// erfc (complementary form keeps the tails exact), the inverse normal cdf,
// double factorials, and compensated summation.
namespace basn {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;
inline constexpr double kSqrt2 = 1.4142135623730950488016887;
inline constexpr double kSqrt2OverPi = 0.7978845608028653558798921;

double normal_pdf(double z);
double log_normal_pdf(double z);
double normal_cdf(double z);
double normal_ccdf(double z);      // 1 - Phi(z), exact in the right tail
double log_normal_cdf(double z);   // stable for z << 0
double normal_quantile(double p);  // p in (0,1)

// (n-1)!! for the BN(n) normalizing constant; n >= -1, odd_double_factorial(-1) = 1.
double odd_double_factorial(int n);

// Neumaier variant of Kahan summation.
double compensated_sum(std::span<const double> xs);

namespace detail {
void check_alpha(double alpha);            // finite, else std::domain_error
void check_finite(double x, const char* what);
}  // namespace detail

}  // namespace basn

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basn/core.hpp"
#include "basn/dataset.hpp"

// Estimation for the location-scale family plus baseline models and
// AIC/BIC/likelihood-ratio comparison. Fitting a dataset is deterministic:
// the optimizer is a Nelder-Mead simplex over (alpha, mu, log sigma) with a
// fixed multi-start list, refined by score-informed Newton polish.
namespace basn {

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model { basn2, normal, laplace, logistic, sn, asn };
enum class FitMethod { mle, mom, closed_form };

std::string_view model_name(Model m);
std::optional<Model> model_from_name(std::string_view name);
int model_param_count(Model m);  // k in the AIC/BIC penalties

struct SampleMoments {
  double m1, m2, m3;  // raw moments; m2 - m1^2 > 0
};

// Compensated sums; throws EstimationError on zero variance.
SampleMoments sample_moments(const Dataset& d);

// Row-major symmetric 3x3, parameter order (alpha, mu, sigma).
using Matrix3 = std::array<std::array<double, 3>, 3>;

struct FitResult {
  Model model;
  std::vector<std::pair<std::string, double>> params;
  double loglik;
  double aic;  // 2k - 2 loglik
  double bic;  // k log n - 2 loglik
  std::optional<Matrix3> vcov;
  FitMethod method;
  bool converged;
  int iterations;
};

struct LrTestResult {
  double statistic;      // 2(loglik_alt - loglik_null), clamped at 0
  double critical_1pct;  // chi^2(1) 99% point, 6.635
  bool reject_null;
};

struct ComparisonRow {
  Model model;
  std::optional<FitResult> fit;
  std::string error;  // set when the fit failed
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // ascending AIC; failures last
};

double basn2_loglik(const Dataset& d, const LocScaleParams& p);
// Gradient of the total log-likelihood, order (alpha, mu, sigma).
std::array<double, 3> basn2_score(const Dataset& d, const LocScaleParams& p);
// Negative Hessian of the total log-likelihood (observed information).
Matrix3 observed_info(const Dataset& d, const LocScaleParams& p);
// Inverse of a positive-definite information matrix; throws EstimationError
// with condition diagnostics otherwise.
Matrix3 vcov(const Matrix3& info);

FitResult mom_fit(const Dataset& d);
FitResult mle_fit(const Dataset& d, std::optional<LocScaleParams> init = std::nullopt);
FitResult baseline_fit(const Dataset& d, Model model);
// Dispatch: basn2 by the requested method, baselines by their own fitters.
FitResult fit_model(const Dataset& d, Model model, FitMethod method = FitMethod::mle);

LrTestResult lr_test_normal_vs_basn2(const Dataset& d);
ComparisonReport compare_models(const Dataset& d, const std::vector<Model>& models);

namespace detail {
inline constexpr std::size_t kMinFitSize = 8;  // three parameters need headroom
void check_fit_size(const Dataset& d);         // throws DataError below the floor
// All moment-matching parameter candidates (roots in alpha of the third-moment
// residual over [-50, 50]); empty when no root exists.
std::vector<LocScaleParams> mom_solve(const SampleMoments& m);
// Per-observation score/Hessian at standardized z = (y-mu)/sigma.
void accumulate_score(double z, const LocScaleParams& p, std::array<double, 3>& s);
void accumulate_hessian(double z, const LocScaleParams& p, Matrix3& h);
}  // namespace detail

}  // namespace basn

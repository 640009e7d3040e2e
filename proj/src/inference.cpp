#include "basn/inference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>

#include "basn/batch.hpp"
#include "basn/math.hpp"
#include "basn/moments.hpp"

namespace basn {

namespace detail {

void check_fit_size(const Dataset& d) {
  if (d.n() < kMinFitSize)
    throw DataError("dataset '" + d.name + "' has " + std::to_string(d.n()) +
                    " values; fitting needs at least " + std::to_string(kMinFitSize));
}

void accumulate_score(double z, const LocScaleParams& p, std::array<double, 3>& s) {
  const double a = p.alpha, sg = p.sigma;
  const double b = 1.0 - a * z;
  const double q = b * b + 1.0;
  const double d = (2.0 + a * a) * (2.0 + 3.0 * a * a);
  const double dp = 16.0 * a + 12.0 * a * a * a;
  const double T = 4.0 * a * b / q;
  s[0] += -4.0 * z * b / q - dp / d;
  s[1] += (T + z) / sg;
  s[2] += (-1.0 + z * (z + T)) / sg;
}

void accumulate_hessian(double z, const LocScaleParams& p, Matrix3& h) {
  const double a = p.alpha, sg = p.sigma;
  const double b = 1.0 - a * z;
  const double q = b * b + 1.0;
  const double q2 = q * q;
  const double d = (2.0 + a * a) * (2.0 + 3.0 * a * a);
  const double dp = 16.0 * a + 12.0 * a * a * a;
  const double dpp = 16.0 + 36.0 * a * a;
  const double T = 4.0 * a * b / q;
  const double U = -T - z;
  const double Uz = 4.0 * a * a * (1.0 - b * b) / q2 - 1.0;
  const double G = b / q - a * z * (1.0 - b * b) / q2;
  const double sg2 = sg * sg;
  h[0][0] += 4.0 * z * z * (1.0 - b * b) / q2 - (dpp * d - dp * dp) / (d * d);
  h[0][1] += 4.0 * G / sg;
  h[0][2] += 4.0 * z * G / sg;
  h[1][1] += (4.0 * a * a * (1.0 - b * b) / q2 - 1.0) / sg2;
  h[1][2] += (z * Uz + U) / sg2;
  h[2][2] += (1.0 + 2.0 * z * U + z * z * Uz) / sg2;
}

}  // namespace detail

std::string_view model_name(Model m) {
  switch (m) {
    case Model::basn2: return "basn2";
    case Model::normal: return "normal";
    case Model::laplace: return "laplace";
    case Model::logistic: return "logistic";
    case Model::sn: return "sn";
    case Model::asn: return "asn";
  }
  return "?";
}

std::optional<Model> model_from_name(std::string_view name) {
  for (Model m : {Model::basn2, Model::normal, Model::laplace, Model::logistic, Model::sn,
                  Model::asn})
    if (model_name(m) == name) return m;
  return std::nullopt;
}

int model_param_count(Model m) {
  switch (m) {
    case Model::basn2:
    case Model::sn:
    case Model::asn: return 3;
    default: return 2;
  }
}

SampleMoments sample_moments(const Dataset& d) {
  if (d.n() == 0) throw EstimationError("sample_moments: empty dataset");
  const double n = static_cast<double>(d.n());
  std::vector<double> pw(d.n());
  SampleMoments m{};
  std::copy(d.values.begin(), d.values.end(), pw.begin());
  m.m1 = compensated_sum(pw) / n;
  for (std::size_t i = 0; i < d.n(); ++i) pw[i] = d.values[i] * d.values[i];
  m.m2 = compensated_sum(pw) / n;
  for (std::size_t i = 0; i < d.n(); ++i) pw[i] *= d.values[i];
  m.m3 = compensated_sum(pw) / n;
  if (!(m.m2 - m.m1 * m.m1 > 0.0))
    throw EstimationError("sample_moments: zero variance in '" + d.name + "'");
  return m;
}

double basn2_loglik(const Dataset& d, const LocScaleParams& p) {
  return batch::loglik_sum(d.values, p);
}

std::array<double, 3> basn2_score(const Dataset& d, const LocScaleParams& p) {
  detail::check_locscale(p);
  std::array<double, 3> s{0.0, 0.0, 0.0};
  for (double y : d.values) detail::accumulate_score((y - p.mu) / p.sigma, p, s);
  return s;
}

Matrix3 observed_info(const Dataset& d, const LocScaleParams& p) {
  detail::check_locscale(p);
  Matrix3 h{};
  for (double y : d.values) detail::accumulate_hessian((y - p.mu) / p.sigma, p, h);
  h[1][0] = h[0][1];
  h[2][0] = h[0][2];
  h[2][1] = h[1][2];
  Matrix3 info;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) info[i][j] = -h[i][j];
  return info;
}

Matrix3 vcov(const Matrix3& info) {
  // Cholesky factorization; a non-positive pivot means the information matrix
  // is not positive definite and no covariance exists.
  Matrix3 L{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = info[i][j];
      for (int k = 0; k < j; ++k) sum -= L[i][k] * L[j][k];
      if (i == j) {
        if (!(sum > 0.0))
          throw EstimationError("vcov: information matrix not positive definite (pivot " +
                                std::to_string(i) + " = " + std::to_string(sum) + ")");
        L[i][i] = std::sqrt(sum);
      } else {
        L[i][j] = sum / L[j][j];
      }
    }
  }
  // Invert L, then vcov = L^-T L^-1.
  Matrix3 Li{};
  for (int i = 0; i < 3; ++i) {
    Li[i][i] = 1.0 / L[i][i];
    for (int j = 0; j < i; ++j) {
      double sum = 0.0;
      for (int k = j; k < i; ++k) sum += L[i][k] * Li[k][j];
      Li[i][j] = -sum / L[i][i];
    }
  }
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (int k = std::max(i, j); k < 3; ++k) sum += Li[k][i] * Li[k][j];
      out[i][j] = out[j][i] = sum;
    }
  return out;
}

namespace {

constexpr double kBadObjective = 1e300;

struct NmResult {
  std::vector<double> x;
  double fx;
  int iterations;
  double diameter;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) minimizing fn; deterministic for a given start.
NmResult nelder_mead(const std::vector<double>& x0,
                     const std::function<double(const std::vector<double>&)>& fn, int max_iter) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += 0.1 * (1.0 + std::fabs(x0[i]));
  std::vector<double> fs(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fs[i] = fn(xs[i]);

  auto diameter = [&] {
    double dmax = 0.0;
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        dmax = std::max(dmax, std::fabs(xs[i][k] - xs[0][k]));
    return dmax;
  };

  int iter = 0;
  std::vector<std::size_t> order(dim + 1);
  for (; iter < max_iter; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fs[a] < fs[b];
    });
    std::vector<std::vector<double>> xs2(dim + 1);
    std::vector<double> fs2(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      xs2[i] = xs[order[i]];
      fs2[i] = fs[order[i]];
    }
    xs.swap(xs2);
    fs.swap(fs2);
    if (diameter() < 1e-10 && fs[dim] - fs[0] < 1e-12) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += xs[i][k] / dim;
    auto blend = [&](double t) {
      std::vector<double> x(dim);
      for (std::size_t k = 0; k < dim; ++k) x[k] = centroid[k] + t * (xs[dim][k] - centroid[k]);
      return x;
    };
    auto xr = blend(-1.0);
    const double fr = fn(xr);
    if (fr < fs[0]) {
      auto xe = blend(-2.0);
      const double fe = fn(xe);
      if (fe < fr) {
        xs[dim] = std::move(xe);
        fs[dim] = fe;
      } else {
        xs[dim] = std::move(xr);
        fs[dim] = fr;
      }
    } else if (fr < fs[dim - 1]) {
      xs[dim] = std::move(xr);
      fs[dim] = fr;
    } else {
      const bool outside = fr < fs[dim];
      auto xc = blend(outside ? -0.5 : 0.5);
      const double fc = fn(xc);
      if (fc < (outside ? fr : fs[dim])) {
        xs[dim] = std::move(xc);
        fs[dim] = fc;
      } else {
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t k = 0; k < dim; ++k) xs[i][k] = xs[0][k] + 0.5 * (xs[i][k] - xs[0][k]);
          fs[i] = fn(xs[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (fs[i] < fs[best]) best = i;
  return {xs[best], fs[best], iter, diameter()};
}

double central_grad_norm(const std::vector<double>& x,
                         const std::function<double(const std::vector<double>&)>& fn) {
  double norm2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double h = 1e-6 * (1.0 + std::fabs(x[k]));
    auto xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const double g = (fn(xp) - fn(xm)) / (2.0 * h);
    norm2 += g * g;
  }
  return std::sqrt(norm2);
}

double safe_neg(double loglik) {
  return std::isfinite(loglik) ? -loglik : kBadObjective;
}

struct MleOutcome {
  LocScaleParams p;
  double loglik;
  bool converged;
  int iterations;
};

// Newton refinement on (alpha, mu, sigma) using the analytic score and
// observed information, with backtracking to keep the likelihood increasing.
void newton_polish(const Dataset& d, MleOutcome& best) {
  for (int step = 0; step < 8; ++step) {
    const auto s = basn2_score(d, best.p);
    const double snorm = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    if (snorm < 1e-9 * static_cast<double>(d.n())) break;
    Matrix3 cov;
    try {
      cov = vcov(observed_info(d, best.p));
    } catch (const EstimationError&) {
      break;
    }
    std::array<double, 3> delta{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) delta[i] += cov[i][j] * s[j];
    bool improved = false;
    for (double t = 1.0; t >= 1.0 / 256.0; t *= 0.5) {
      LocScaleParams cand{best.p.alpha + t * delta[0], best.p.mu + t * delta[1],
                          best.p.sigma + t * delta[2]};
      if (!(cand.sigma > 0.0)) continue;
      const double ll = basn2_loglik(d, cand);
      if (ll > best.loglik) {
        best.p = cand;
        best.loglik = ll;
        best.iterations += 1;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
}

MleOutcome run_basn2_start(const Dataset& d, const LocScaleParams& start, int max_iter) {
  auto obj = [&](const std::vector<double>& x) {
    const LocScaleParams p{x[0], x[1], std::exp(x[2])};
    return safe_neg(basn2_loglik(d, p));
  };
  const auto nm = nelder_mead({start.alpha, start.mu, std::log(start.sigma)}, obj, max_iter);
  MleOutcome out{{nm.x[0], nm.x[1], std::exp(nm.x[2])}, -nm.fx, false, nm.iterations};
  newton_polish(d, out);
  const auto s = basn2_score(d, out.p);
  const double snorm = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
  out.converged = nm.diameter < 1e-9 && snorm / static_cast<double>(d.n()) < 1e-6;
  return out;
}

FitResult finish_fit(const Dataset& d, Model model, FitMethod method,
                     std::vector<std::pair<std::string, double>> params, double loglik,
                     bool converged, int iterations, std::optional<Matrix3> cov) {
  const double k = model_param_count(model);
  const double n = static_cast<double>(d.n());
  return {model, std::move(params), loglik, 2.0 * k - 2.0 * loglik,
          k * std::log(n) - 2.0 * loglik, std::move(cov), method, converged, iterations};
}

double sample_sd(const Dataset& d) {
  const auto m = sample_moments(d);
  return std::sqrt(m.m2 - m.m1 * m.m1);
}

// Raw third moment of mu + sigma*Z implied by alpha; the moment-matching
// residual is the gap to the sample m3.
double model_m3(double alpha, double m1, double s2) {
  const double ez = raw_moment(1, alpha);
  const double ez2 = raw_moment(2, alpha);
  const double ez3 = raw_moment(3, alpha);
  const double varz = ez2 - ez * ez;
  const double sigma = std::sqrt(s2 / varz);
  const double mu = m1 - sigma * ez;
  return mu * mu * mu + 3.0 * mu * mu * sigma * ez + 3.0 * mu * sigma * sigma * ez2 +
         sigma * sigma * sigma * ez3;
}

}  // namespace

namespace detail {

std::vector<LocScaleParams> mom_solve(const SampleMoments& m) {
  const double s2 = m.m2 - m.m1 * m.m1;
  if (!(s2 > 0.0)) throw EstimationError("mom_solve: nonpositive variance");

  auto residual = [&](double a) { return model_m3(a, m.m1, s2) - m.m3; };

  // Sign scan over [-50, 50], then bisection on each bracket.
  const int kScan = 2000;
  std::vector<double> roots;
  double prev_a = -50.0, prev_r = residual(prev_a);
  for (int i = 1; i <= kScan; ++i) {
    const double a = -50.0 + 100.0 * i / kScan;
    const double r = residual(a);
    if (r == 0.0) {
      roots.push_back(a);
    } else if (prev_r != 0.0 && std::signbit(r) != std::signbit(prev_r)) {
      double lo = prev_a, hi = a, rlo = prev_r;
      for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + std::fabs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double rm = residual(mid);
        if (rm == 0.0) {
          lo = hi = mid;
        } else if (std::signbit(rm) == std::signbit(rlo)) {
          lo = mid;
          rlo = rm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_a = a;
    prev_r = r;
  }

  std::vector<LocScaleParams> out;
  for (double a : roots) {
    const double ez = raw_moment(1, a);
    const double varz = raw_moment(2, a) - ez * ez;
    const double sigma = std::sqrt(s2 / varz);
    if (!(sigma > 0.0)) continue;
    out.push_back({a, m.m1 - sigma * ez, sigma});
  }
  return out;
}

}  // namespace detail

FitResult mom_fit(const Dataset& d) {
  detail::check_fit_size(d);
  const auto m = sample_moments(d);
  const double s2 = m.m2 - m.m1 * m.m1;
  const auto candidates = detail::mom_solve(m);

  if (candidates.empty()) {
    const double skew = (m.m3 - 3.0 * m.m1 * s2 - m.m1 * m.m1 * m.m1) / std::pow(s2, 1.5);
    throw EstimationError("mom_fit: no moment-matching root in [-50, 50] for '" + d.name +
                          "' (sample skewness " + std::to_string(skew) + ")");
  }

  std::optional<MleOutcome> best;
  for (const auto& p : candidates) {
    const double ll = basn2_loglik(d, p);
    if (!best || ll > best->loglik) best = MleOutcome{p, ll, true, 0};
  }

  return finish_fit(d, Model::basn2, FitMethod::mom,
                    {{"alpha", best->p.alpha}, {"mu", best->p.mu}, {"sigma", best->p.sigma}},
                    best->loglik, true, static_cast<int>(candidates.size()), std::nullopt);
}

FitResult mle_fit(const Dataset& d, std::optional<LocScaleParams> init) {
  detail::check_fit_size(d);
  std::vector<LocScaleParams> starts;
  if (init) {
    detail::check_locscale(*init);
    starts.push_back(*init);
  } else {
    try {
      const auto mom = mom_fit(d);
      starts.push_back({mom.params[0].second, mom.params[1].second, mom.params[2].second});
    } catch (const EstimationError&) {
      // fall through to the grid
    }
    const auto m = sample_moments(d);
    const double sd = sample_sd(d);
    for (double a : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) starts.push_back({a, m.m1, sd});
  }

  std::optional<MleOutcome> best;
  for (const auto& s : starts) {
    const auto out = run_basn2_start(d, s, 500);
    if (!best || out.loglik > best->loglik) best = out;
  }

  std::optional<Matrix3> cov;
  try {
    cov = vcov(observed_info(d, best->p));
  } catch (const EstimationError&) {
    cov = std::nullopt;
  }
  return finish_fit(d, Model::basn2, FitMethod::mle,
                    {{"alpha", best->p.alpha}, {"mu", best->p.mu}, {"sigma", best->p.sigma}},
                    best->loglik, best->converged, best->iterations, cov);
}

namespace {

FitResult fit_normal(const Dataset& d) {
  const auto m = sample_moments(d);
  const double var = m.m2 - m.m1 * m.m1;
  const double sigma = std::sqrt(var);
  const double n = static_cast<double>(d.n());
  const double ll = -n * (std::log(sigma) + 0.5 * std::log(2.0 * std::numbers::pi) + 0.5);
  return finish_fit(d, Model::normal, FitMethod::closed_form, {{"mu", m.m1}, {"sigma", sigma}},
                    ll, true, 0, std::nullopt);
}

FitResult fit_laplace(const Dataset& d) {
  std::vector<double> sorted = d.values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double med = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  std::vector<double> dev(n);
  for (std::size_t i = 0; i < n; ++i) dev[i] = std::fabs(sorted[i] - med);
  const double b = compensated_sum(dev) / static_cast<double>(n);
  if (!(b > 0.0)) throw EstimationError("laplace fit: zero dispersion");
  const double ll = -static_cast<double>(n) * (std::log(2.0 * b) + 1.0);
  return finish_fit(d, Model::laplace, FitMethod::closed_form, {{"mu", med}, {"b", b}}, ll, true,
                    0, std::nullopt);
}

double logistic_loglik(const Dataset& d, double mu, double s) {
  double ll = 0.0;
  for (double y : d.values) {
    const double w = std::fabs((y - mu) / s);
    ll += -w - std::log(s) - 2.0 * std::log1p(std::exp(-w));
  }
  return ll;
}

double sn_loglik(const Dataset& d, double lambda, double xi, double omega) {
  double ll = 0.0;
  for (double y : d.values) {
    const double w = (y - xi) / omega;
    ll += std::log(2.0) - std::log(omega) + log_normal_pdf(w) + log_normal_cdf(lambda * w);
  }
  return ll;
}

double asn_loglik(const Dataset& d, const LocScaleParams& p) {
  double ll = 0.0;
  for (double y : d.values) {
    const double z = (y - p.mu) / p.sigma;
    const double b = 1.0 - p.alpha * z;
    ll += std::log(b * b + 1.0) - std::log(2.0 + p.alpha * p.alpha) - std::log(p.sigma) +
          log_normal_pdf(z);
  }
  return ll;
}

struct SimplexFit {
  std::vector<double> x;
  double loglik;
  bool converged;
  int iterations;
};

SimplexFit best_of_starts(const std::vector<std::vector<double>>& starts, double n,
                          const std::function<double(const std::vector<double>&)>& obj) {
  std::optional<SimplexFit> best;
  for (const auto& s : starts) {
    const auto nm = nelder_mead(s, obj, 500);
    const bool conv = nm.diameter < 1e-9 && central_grad_norm(nm.x, obj) / n < 1e-6;
    if (!best || -nm.fx > best->loglik) best = SimplexFit{nm.x, -nm.fx, conv, nm.iterations};
  }
  return *best;
}

FitResult fit_logistic(const Dataset& d) {
  const auto m = sample_moments(d);
  const double s0 = sample_sd(d) * std::numbers::sqrt3 / std::numbers::pi;
  auto obj = [&](const std::vector<double>& x) {
    return safe_neg(logistic_loglik(d, x[0], std::exp(x[1])));
  };
  const auto fit = best_of_starts({{m.m1, std::log(s0)}}, static_cast<double>(d.n()), obj);
  return finish_fit(d, Model::logistic, FitMethod::mle,
                    {{"mu", fit.x[0]}, {"s", std::exp(fit.x[1])}}, fit.loglik, fit.converged,
                    fit.iterations, std::nullopt);
}

FitResult fit_sn(const Dataset& d) {
  const auto m = sample_moments(d);
  const double sd = sample_sd(d);
  auto obj = [&](const std::vector<double>& x) {
    return safe_neg(sn_loglik(d, x[0], x[1], std::exp(x[2])));
  };
  std::vector<std::vector<double>> starts;
  for (double lam : {-4.0, -2.0, 0.0, 2.0, 4.0}) starts.push_back({lam, m.m1, std::log(sd)});
  const auto fit = best_of_starts(starts, static_cast<double>(d.n()), obj);
  return finish_fit(d, Model::sn, FitMethod::mle,
                    {{"lambda", fit.x[0]}, {"xi", fit.x[1]}, {"omega", std::exp(fit.x[2])}},
                    fit.loglik, fit.converged, fit.iterations, std::nullopt);
}

FitResult fit_asn(const Dataset& d) {
  const auto m = sample_moments(d);
  const double sd = sample_sd(d);
  auto obj = [&](const std::vector<double>& x) {
    return safe_neg(asn_loglik(d, {x[0], x[1], std::exp(x[2])}));
  };
  std::vector<std::vector<double>> starts;
  for (double a : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) starts.push_back({a, m.m1, std::log(sd)});
  const auto fit = best_of_starts(starts, static_cast<double>(d.n()), obj);
  return finish_fit(d, Model::asn, FitMethod::mle,
                    {{"alpha", fit.x[0]}, {"mu", fit.x[1]}, {"sigma", std::exp(fit.x[2])}},
                    fit.loglik, fit.converged, fit.iterations, std::nullopt);
}

}  // namespace

FitResult baseline_fit(const Dataset& d, Model model) {
  detail::check_fit_size(d);
  switch (model) {
    case Model::normal: return fit_normal(d);
    case Model::laplace: return fit_laplace(d);
    case Model::logistic: return fit_logistic(d);
    case Model::sn: return fit_sn(d);
    case Model::asn: return fit_asn(d);
    case Model::basn2: break;
  }
  throw EstimationError("baseline_fit: basn2 is fitted by mle_fit/mom_fit");
}

FitResult fit_model(const Dataset& d, Model model, FitMethod method) {
  if (model == Model::basn2)
    return method == FitMethod::mom ? mom_fit(d) : mle_fit(d);
  return baseline_fit(d, model);
}

LrTestResult lr_test_normal_vs_basn2(const Dataset& d) {
  const auto null_fit = baseline_fit(d, Model::normal);
  const auto alt_fit = mle_fit(d);
  double stat = 2.0 * (alt_fit.loglik - null_fit.loglik);
  if (stat < 0.0) {
    if (stat < -1e-7)
      throw EstimationError("lr test: alternative likelihood below the null (" +
                            std::to_string(stat) + "); fit did not converge");
    stat = 0.0;
  }
  const double crit = 6.635;
  return {stat, crit, stat > crit};
}

ComparisonReport compare_models(const Dataset& d, const std::vector<Model>& models) {
  if (models.empty()) throw EstimationError("compare_models: empty model list");
  ComparisonReport report;
  for (Model m : models) {
    ComparisonRow row{m, std::nullopt, ""};
    try {
      row.fit = fit_model(d, m);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ComparisonRow& a,
                                                       const ComparisonRow& b) {
    if (a.fit.has_value() != b.fit.has_value()) return a.fit.has_value();
    if (!a.fit) return model_name(a.model) < model_name(b.model);
    if (a.fit->aic != b.fit->aic) return a.fit->aic < b.fit->aic;
    if (a.fit->bic != b.fit->bic) return a.fit->bic < b.fit->bic;
    return model_name(a.model) < model_name(b.model);
  });
  return report;
}

}  // namespace basn

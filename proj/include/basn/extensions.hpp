#pragma once

#include <string>
#include <vector>

// The five extension families: bivariate, two-parameter, alpha-beta (cubic
// tilt), hidden-truncation generalized, and log-transformed. Densities and
// normalizing constants only; no cdfs, moments, or fitting.
//
// Normalizing constants come from closed forms; extensions_self_check()
// audits every one of them against adaptive quadrature (tolerance 1e-6
// relative) and the first density evaluation of each family runs the audit
// once, so a silently wrong constant cannot leak downstream.
namespace basn {

struct BivariateParams {
  double alpha1;
  double alpha2;
  double rho;  // |rho| < 1
};

struct TwoAlphaParams {
  double alpha1;
  double alpha2;
};

struct AlphaBetaParams {
  double alpha;
  double beta;
};

struct GenParams {
  double alpha;
  double lambda;
  double delta() const;  // lambda/sqrt(1+lambda^2)
};

double bbasn2_pdf(double z1, double z2, const BivariateParams& p);
double bbasn2_norm_constant(const BivariateParams& p);

double tpbasn2_pdf(double z, const TwoAlphaParams& p);
double tpbasn2_norm_constant(const TwoAlphaParams& p);

double babsn2_pdf(double z, const AlphaBetaParams& p);
double babsn2_norm_constant(const AlphaBetaParams& p);

double gbasn2_pdf(double z, const GenParams& p);
double gbasn2_norm_constant(const GenParams& p);

double lbasn2_pdf(double z, double alpha);  // z > 0; includes the 1/z Jacobian

struct SelfCheckEntry {
  std::string family;
  double max_rel_err;  // closed-form constant vs quadrature over the audit grid
  bool pass;
};

std::vector<SelfCheckEntry> extensions_self_check();

}  // namespace basn

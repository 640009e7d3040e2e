// Batch front end: CSV ingestion, fitting, model comparison, sampling,
// density/hazard tabulation, likelihood-ratio testing, and a self-check
// command that audits the closed forms against quadrature.
//
// Output is JSON (schema_version "1") on stdout, or CSV streams for the
// sample/tabulate/hazard commands with --output-format table (their default).
// Exit codes: 0 success, 1 usage error, 2 data error, 3 estimation failure.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "basn/batch.hpp"
#include "basn/core.hpp"
#include "basn/dataset.hpp"
#include "basn/extensions.hpp"
#include "basn/inference.hpp"
#include "basn/lifetime.hpp"
#include "basn/math.hpp"
#include "basn/moments.hpp"
#include "basn/sampling.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250801;  // fixed default; no wall-clock seeding

enum class Format { json, table };

// Empty string means "not given"; each command picks its own default.
Format resolve_format(const std::string& given, Format fallback) {
  if (given.empty()) return fallback;
  return given == "table" ? Format::table : Format::json;
}

json envelope(const std::string& command, json inputs) {
  json rep;
  rep["schema_version"] = "1";
  rep["command"] = command;
  rep["inputs"] = std::move(inputs);
  rep["results"] = json::object();
  rep["findings"] = json::array();
  return rep;
}

int emit_error(const std::string& command, const std::string& type, const std::string& message,
               int code) {
  json rep;
  rep["schema_version"] = "1";
  rep["command"] = command;
  rep["error"] = {{"type", type}, {"message", message}};
  std::cout << rep.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return code;
}

std::string method_name(basn::FitMethod m) {
  switch (m) {
    case basn::FitMethod::mle: return "mle";
    case basn::FitMethod::mom: return "mom";
    case basn::FitMethod::closed_form: return "closed_form";
  }
  return "?";
}

json fit_to_json(const basn::FitResult& r) {
  json out;
  out["model"] = std::string(basn::model_name(r.model));
  out["method"] = method_name(r.method);
  json params = json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  out["params"] = std::move(params);
  out["loglik"] = r.loglik;
  out["aic"] = r.aic;
  out["bic"] = r.bic;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  if (r.vcov) {
    json m = json::array();
    for (const auto& row : *r.vcov) m.push_back(std::vector<double>(row.begin(), row.end()));
    out["vcov"] = std::move(m);
    out["vcov_order"] = {"alpha", "mu", "sigma"};
  } else {
    out["vcov"] = nullptr;
  }
  return out;
}

void print_fit_table(const basn::FitResult& r) {
  std::printf("model       %s\n", std::string(basn::model_name(r.model)).c_str());
  std::printf("method      %s\n", method_name(r.method).c_str());
  for (const auto& [name, value] : r.params) std::printf("%-11s %.15g\n", name.c_str(), value);
  std::printf("loglik      %.15g\n", r.loglik);
  std::printf("aic         %.15g\n", r.aic);
  std::printf("bic         %.15g\n", r.bic);
  std::printf("converged   %s\n", r.converged ? "yes" : "no");
  if (r.vcov) {
    std::printf("vcov (alpha, mu, sigma)\n");
    for (const auto& row : *r.vcov)
      std::printf("  %14.6g %14.6g %14.6g\n", row[0], row[1], row[2]);
  }
}

struct GridSpec {
  double from = 0.0, to = 0.0, step = 0.0;
};

// Usage-level validation; from == to yields a single row.
void check_grid(const GridSpec& g, bool nonnegative) {
  if (!(g.step > 0.0)) throw CLI::ValidationError("--step must be > 0");
  if (!(g.from <= g.to)) throw CLI::ValidationError("--from must be <= --to");
  if (nonnegative && g.from < 0.0) throw CLI::ValidationError("--from must be >= 0");
  if (!std::isfinite(g.from) || !std::isfinite(g.to)) throw CLI::ValidationError("grid not finite");
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> ts;
  const double span = g.to - g.from;
  const auto count = static_cast<std::size_t>(std::floor(span / g.step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) ts.push_back(g.from + static_cast<double>(i) * g.step);
  return ts;
}

int finish_report(json& rep, Format fmt, const std::function<void()>& table_printer,
                  int code = 0) {
  if (fmt == Format::json)
    std::cout << rep.dump(2) << "\n";
  else
    table_printer();
  return code;
}

// --- commands ---------------------------------------------------------------

int cmd_fit(const std::string& data, const std::string& column, const std::string& model_s,
            const std::string& method_s, Format fmt) {
  const auto model = basn::model_from_name(model_s);
  if (!model) throw CLI::ValidationError("unknown model '" + model_s + "'");
  if (method_s != "mle" && method_s != "mom")
    throw CLI::ValidationError("--method must be mle or mom");
  if (method_s == "mom" && *model != basn::Model::basn2)
    throw CLI::ValidationError("--method mom applies only to basn2");

  const auto d = basn::ingest_csv(data, column);
  const auto method = method_s == "mom" ? basn::FitMethod::mom : basn::FitMethod::mle;
  const auto r = basn::fit_model(d, *model, method);

  json rep = envelope("fit", {{"data", data},
                              {"column", column},
                              {"model", model_s},
                              {"method", method_s},
                              {"dataset", d.name},
                              {"n", d.n()}});
  rep["results"] = fit_to_json(r);
  return finish_report(rep, fmt, [&] { print_fit_table(r); }, r.converged ? 0 : 3);
}

int cmd_compare(const std::string& data, const std::string& column,
                const std::vector<std::string>& model_names, Format fmt) {
  std::vector<basn::Model> models;
  for (const auto& name : model_names) {
    const auto m = basn::model_from_name(name);
    if (!m) throw CLI::ValidationError("unknown model '" + name + "'");
    models.push_back(*m);
  }
  const auto d = basn::ingest_csv(data, column);
  const auto report = basn::compare_models(d, models);

  json rows = json::array();
  int rank = 1;
  bool any_ok = false;
  for (const auto& row : report.rows) {
    json jr;
    jr["model"] = std::string(basn::model_name(row.model));
    if (row.fit) {
      any_ok = true;
      jr["rank"] = rank++;
      jr["fit"] = fit_to_json(*row.fit);
    } else {
      jr["rank"] = nullptr;
      jr["error"] = row.error;
    }
    rows.push_back(std::move(jr));
  }
  json rep = envelope("compare", {{"data", data}, {"column", column}, {"dataset", d.name},
                                  {"n", d.n()}});
  rep["results"]["rows"] = std::move(rows);
  auto table = [&] {
    std::printf("%-10s %12s %12s %12s\n", "model", "loglik", "aic", "bic");
    for (const auto& row : report.rows) {
      if (row.fit)
        std::printf("%-10s %12.4f %12.4f %12.4f\n",
                    std::string(basn::model_name(row.model)).c_str(), row.fit->loglik,
                    row.fit->aic, row.fit->bic);
      else
        std::printf("%-10s failed: %s\n", std::string(basn::model_name(row.model)).c_str(),
                    row.error.c_str());
    }
  };
  return finish_report(rep, fmt, table, any_ok ? 0 : 3);
}

int cmd_lrtest(const std::string& data, const std::string& column, Format fmt) {
  const auto d = basn::ingest_csv(data, column);
  const auto normal = basn::baseline_fit(d, basn::Model::normal);
  const auto alt = basn::mle_fit(d);
  const auto lr = basn::lr_test_normal_vs_basn2(d);

  json rep = envelope("lrtest", {{"data", data}, {"column", column}, {"dataset", d.name},
                                 {"n", d.n()}});
  rep["results"] = {{"statistic", lr.statistic},
                    {"critical_1pct", lr.critical_1pct},
                    {"reject_null", lr.reject_null},
                    {"loglik_basn2", alt.loglik},
                    {"loglik_normal", normal.loglik}};
  auto table = [&] {
    std::printf("LR statistic   %.15g\n", lr.statistic);
    std::printf("1%% critical    %.15g\n", lr.critical_1pct);
    std::printf("reject normal  %s\n", lr.reject_null ? "yes" : "no");
  };
  return finish_report(rep, fmt, table);
}

int cmd_sample(double alpha, double mu, double sigma, std::uint64_t n, std::uint64_t seed,
               Format fmt) {
  const basn::LocScaleParams p{alpha, mu, sigma};
  basn::SampleStats stats;
  const auto values = basn::sample_locscale(p, {n, seed}, &stats);
  if (fmt == Format::table) {
    std::printf("value\n");
    for (double v : values) std::printf("%.17g\n", v);
    return 0;
  }
  json rep = envelope("sample", {{"alpha", alpha}, {"mu", mu}, {"sigma", sigma}, {"n", n},
                                 {"seed", seed}});
  rep["results"] = {{"values", values},
                    {"proposals", stats.proposals},
                    {"acceptance_rate", static_cast<double>(stats.accepted) /
                                            static_cast<double>(stats.proposals)}};
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_tabulate(double alpha, double mu, double sigma, const GridSpec& g, Format fmt) {
  check_grid(g, false);
  const basn::LocScaleParams p{alpha, mu, sigma};
  const auto zs = grid_points(g);
  if (fmt == Format::table) {
    std::printf("z,pdf,cdf\n");
    for (double z : zs)
      std::printf("%.17g,%.17g,%.17g\n", z, basn::locscale_pdf(z, p), basn::locscale_cdf(z, p));
    return 0;
  }
  json rows = json::array();
  for (double z : zs)
    rows.push_back({{"z", z}, {"pdf", basn::locscale_pdf(z, p)},
                    {"cdf", basn::locscale_cdf(z, p)}});
  json rep = envelope("tabulate", {{"alpha", alpha}, {"mu", mu}, {"sigma", sigma},
                                   {"from", g.from}, {"to", g.to}, {"step", g.step}});
  rep["results"]["rows"] = std::move(rows);
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_hazard(double alpha, const GridSpec& g, Format fmt) {
  check_grid(g, true);
  const auto ts = grid_points(g);
  if (fmt == Format::table) {
    std::printf("t,pdf,survival,hazard\n");
    for (double t : ts)
      std::printf("%.17g,%.17g,%.17g,%.17g\n", t, basn::hbasn2_pdf(t, alpha),
                  basn::hbasn2_survival(t, alpha), basn::hbasn2_hazard(t, alpha));
    return 0;
  }
  json rows = json::array();
  for (double t : ts) {
    const double h = basn::hbasn2_hazard(t, alpha);
    json row = {{"t", t},
                {"pdf", basn::hbasn2_pdf(t, alpha)},
                {"survival", basn::hbasn2_survival(t, alpha)}};
    if (std::isfinite(h)) {
      row["hazard"] = h;
      row["saturated"] = false;
    } else {
      row["hazard"] = nullptr;  // survival underflowed to 0
      row["saturated"] = true;
    }
    rows.push_back(std::move(row));
  }
  json rep = envelope("hazard", {{"alpha", alpha}, {"from", g.from}, {"to", g.to},
                                 {"step", g.step}});
  rep["results"]["rows"] = std::move(rows);
  std::cout << rep.dump(2) << "\n";
  return 0;
}

// --- self-check -------------------------------------------------------------

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;

json make_check(const std::string& name, bool pass, const std::string& detail) {
  return {{"name", name}, {"pass", pass}, {"detail", detail}};
}

int cmd_check(Format fmt) {
  json checks = json::array();
  char buf[256];

  {
    double worst = 0.0;
    for (double a : {-5.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0}) {
      const double mass =
          Quad::integrate([a](double z) { return basn::basn2_pdf(z, a); }, -14.0, 14.0, 10,
                          1e-12);
      worst = std::max(worst, std::fabs(mass - 1.0));
    }
    std::snprintf(buf, sizeof buf, "max |mass - 1| = %.3g over 9 alphas", worst);
    checks.push_back(make_check("density normalization", worst <= 1e-8, buf));
  }
  {
    double worst = 0.0;
    for (double a : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const double mass =
          Quad::integrate([a](double t) { return basn::hbasn2_pdf(t, a); }, 0.0, 14.0, 10,
                          1e-12);
      worst = std::max(worst, std::fabs(mass - 1.0));
    }
    std::snprintf(buf, sizeof buf, "max |mass - 1| = %.3g", worst);
    checks.push_back(make_check("lifetime normalization", worst <= 1e-8, buf));
  }
  for (const auto& entry : basn::extensions_self_check()) {
    std::snprintf(buf, sizeof buf, "max relative error %.3g vs quadrature", entry.max_rel_err);
    checks.push_back(make_check("extension constant: " + entry.family, entry.pass, buf));
  }
  {
    double worst = -1.0;
    for (double a : {-5.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0}) {
      const double delta = basn::envelope_bound(a).delta;
      worst = std::max(worst, basn::batch::envelope_max_violation(a, delta, -12.0, 12.0, 100001));
    }
    std::snprintf(buf, sizeof buf, "max of pdf - delta*proposal = %.3g", worst);
    checks.push_back(make_check("rejection envelope", worst <= 0.0, buf));
  }
  {
    double worst = 0.0;
    for (double a : {-2.0, 0.0, 1.0}) {
      for (double z = -6.0; z <= 6.0; z += 0.5) {
        const double h = 1e-5;
        const double fd = (basn::basn2_cdf(z + h, a) - basn::basn2_cdf(z - h, a)) / (2.0 * h);
        worst = std::max(worst, std::fabs(fd - basn::basn2_pdf(z, a)));
      }
    }
    std::snprintf(buf, sizeof buf, "max |dF/dz - f| = %.3g", worst);
    checks.push_back(make_check("cdf derivative", worst <= 1e-6, buf));
  }
  {
    double worst = 0.0;
    for (double a : {-1.0, 0.0, 1.0, 2.0})
      for (double t = 0.0; t <= 6.0; t += 0.25) {
        const double err = std::fabs(basn::hbasn2_hazard(t, a) * basn::hbasn2_survival(t, a) -
                                     basn::hbasn2_pdf(t, a));
        worst = std::max(worst, err);
      }
    std::snprintf(buf, sizeof buf, "max |h*S - f| = %.3g", worst);
    checks.push_back(make_check("hazard identity", worst <= 1e-10, buf));
  }
  double mgf_quad_gap = 0.0, mgf_variant_gap = 0.0;
  {
    for (const auto& [t, a] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.0, 0.75}}) {
      const double quad = Quad::integrate(
          [&](double z) { return std::exp(t * z) * basn::basn2_pdf(z, a); }, -14.0, 14.0, 10,
          1e-12);
      mgf_quad_gap = std::max(mgf_quad_gap, std::fabs(quad - basn::basn2_mgf(t, a)));
      const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
      const double d = (2.0 + a2) * (2.0 + 3.0 * a2);
      const double variant = std::exp(0.5 * t * t) *
                             (a4 * t * t * t * t + 6.0 * a4 * t * t + 3.0 * a4 -
                              4.0 * a3 * t * t * t - 34.0 * a3 * t + 8.0 * a2 * t * t +
                              8.0 * a2 - 8.0 * a * t + 4.0) / d;
      mgf_variant_gap = std::max(mgf_variant_gap, std::fabs(quad - variant));
    }
    std::snprintf(buf, sizeof buf, "closed form within %.3g of quadrature", mgf_quad_gap);
    checks.push_back(make_check("mgf closed form", mgf_quad_gap <= 1e-8, buf));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const double quad = Quad::integrate(
          [n](double z) { return std::pow(z, n) * basn::basn2_pdf(z, 1.0); }, -14.0, 14.0, 10,
          1e-12);
      const double closed = basn::raw_moment(n, 1.0);
      worst = std::max(worst, std::fabs(quad - closed) / std::max(1.0, std::fabs(closed)));
    }
    std::snprintf(buf, sizeof buf, "max relative error %.3g for orders 0..8", worst);
    checks.push_back(make_check("moment closed forms", worst <= 1e-8, buf));
  }

  json findings = json::array();
  const double delta = basn::envelope_bound(1.0).delta;
  findings.push_back({{"id", "mgf-cubic-coefficient"},
                      {"reference", "-34*alpha^3*t"},
                      {"computed", "-12*alpha^3*t"},
                      {"status", "corrected"},
                      {"detail", "quadrature sides with -12: at (t,alpha)=(0.5,1) the reference "
                                 "coefficient misses the integral by " +
                                     std::to_string(mgf_variant_gap)}});
  findings.push_back({{"id", "envelope-constant"},
                      {"reference", "(1+2*sqrt(3))/3 = 1.48803"},
                      {"computed", delta},
                      {"status", "corrected"},
                      {"detail", "the density/proposal ratio already reaches 1.923 at alpha=1, "
                                 "z=-1; the computed supremum (3+2*sqrt(2))/3 is used"}});
  findings.push_back({{"id", "lifetime-survival-example"},
                      {"reference", 0.3359},
                      {"computed", basn::hbasn2_survival(1.0, 1.0)},
                      {"status", "corrected"},
                      {"detail", "survival at t=1, alpha=1 from the closed-form cdf, confirmed "
                                 "by direct quadrature"}});
  findings.push_back({{"id", "two-alpha-constant-symmetry"},
                      {"computed", "C(a1,a2) = C(a2,a1)"},
                      {"status", "verified"},
                      {"detail", "the two-shape-parameter normalizer is exactly symmetric and "
                                 "matches quadrature over the audit grid"}});
  findings.push_back({{"id", "cubic-tilt-constant"},
                      {"reference", 14976.0},
                      {"computed", basn::babsn2_norm_constant({1.0, 1.0})},
                      {"status", "corrected"},
                      {"detail", "normalizer at (alpha,beta)=(1,1); quadrature confirms 15048"}});
  findings.push_back({{"id", "c2-lower-bound"},
                      {"reference", "c2 in [5/3, 3)"},
                      {"computed", "c2 in [1, 3)"},
                      {"status", "corrected"},
                      {"detail", "c2(0) = 1; the quoted lower bound 5/3 is c2 at |alpha|=1"}});
  findings.push_back({{"id", "variance-upper-bound"},
                      {"reference", 4.7966},
                      {"computed", "sup = 5, approached as |alpha| -> inf"},
                      {"status", "corrected"},
                      {"detail", "Var is 0.97207 at |alpha|=0.6158 (minimum) and increases "
                                 "toward 5 without attaining it"}});
  findings.push_back(
      {{"id", "normal-cdf-ordering"},
       {"computed", "F(z;alpha) >= Phi(z) only below a crossing point z*(alpha)"},
       {"status", "qualified"},
       {"detail", "for 0<alpha<1 the cdf dominates Phi only up to z*; z*(0.5)=4.20, "
                  "z*(1)=2.26, so the ordering fails inside [-4,4] once alpha > 0.527"}});

  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c["pass"].get<bool>();

  json rep = envelope("check", json::object());
  rep["results"]["checks"] = checks;
  rep["results"]["all_pass"] = all_pass;
  rep["findings"] = findings;
  auto table = [&] {
    for (const auto& c : checks)
      std::printf("%-32s %s  %s\n", c["name"].get<std::string>().c_str(),
                  c["pass"].get<bool>() ? "pass" : "FAIL",
                  c["detail"].get<std::string>().c_str());
    std::printf("findings: %zu (see json output for detail)\n", findings.size());
  };
  return finish_report(rep, fmt, table, all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alpha-skew-normal family toolkit: densities, sampling, fitting, comparison"};
  app.require_subcommand(1);

  std::string data, column, model = "basn2", method = "mle";
  std::vector<std::string> models = {"basn2", "normal", "laplace", "logistic", "sn", "asn"};
  double alpha = 0.0, mu = 0.0, sigma = 1.0;
  std::uint64_t n = 10, seed = kDefaultSeed;
  GridSpec grid;
  std::string format_flag;  // empty until --output-format is given

  auto add_format = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("--output-format", format_flag, help)
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* fit = app.add_subcommand("fit", "fit one model to a CSV column");
  fit->add_option("--data", data, "CSV file")->required();
  fit->add_option("--column", column, "column name or 0-based index");
  fit->add_option("--model", model, "basn2|normal|laplace|logistic|sn|asn");
  fit->add_option("--method", method, "mle or mom (basn2 only)");
  add_format(fit, "json (default) or table");

  auto* compare = app.add_subcommand("compare", "fit several models, rank by AIC");
  compare->add_option("--data", data, "CSV file")->required();
  compare->add_option("--column", column, "column name or 0-based index");
  compare->add_option("--models", models, "comma-separated model list")->delimiter(',');
  add_format(compare, "json (default) or table");

  auto* lrtest = app.add_subcommand("lrtest", "likelihood-ratio test, normal vs basn2");
  lrtest->add_option("--data", data, "CSV file")->required();
  lrtest->add_option("--column", column, "column name or 0-based index");
  add_format(lrtest, "json (default) or table");

  auto* sample = app.add_subcommand("sample", "draw reproducible variates");
  sample->add_option("--alpha", alpha, "shape")->required();
  sample->add_option("--mu", mu, "location");
  sample->add_option("--sigma", sigma, "scale > 0");
  sample->add_option("--n", n, "sample size >= 1");
  sample->add_option("--seed", seed, "RNG seed (default fixed, not wall clock)");
  add_format(sample, "table (CSV stream, default) or json");

  auto* tabulate = app.add_subcommand("tabulate", "density and cdf over a grid");
  tabulate->add_option("--alpha", alpha, "shape")->required();
  tabulate->add_option("--mu", mu, "location");
  tabulate->add_option("--sigma", sigma, "scale > 0");
  tabulate->add_option("--from", grid.from, "grid start")->required();
  tabulate->add_option("--to", grid.to, "grid end")->required();
  tabulate->add_option("--step", grid.step, "grid step > 0")->required();
  add_format(tabulate, "table (CSV stream, default) or json");

  auto* hazard = app.add_subcommand("hazard", "lifetime pdf/survival/hazard over a grid");
  hazard->add_option("--alpha", alpha, "shape")->required();
  hazard->add_option("--from", grid.from, "grid start >= 0")->required();
  hazard->add_option("--to", grid.to, "grid end")->required();
  hazard->add_option("--step", grid.step, "grid step > 0")->required();
  add_format(hazard, "table (CSV stream, default) or json");

  auto* check = app.add_subcommand("check", "audit closed forms against quadrature");
  add_format(check, "json (default) or table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  const std::string cmd_name = app.get_subcommands().front()->get_name();
  try {
    if (fit->parsed())
      return cmd_fit(data, column, model, method, resolve_format(format_flag, Format::json));
    if (compare->parsed())
      return cmd_compare(data, column, models, resolve_format(format_flag, Format::json));
    if (lrtest->parsed())
      return cmd_lrtest(data, column, resolve_format(format_flag, Format::json));
    if (sample->parsed()) {
      if (n < 1) throw CLI::ValidationError("--n must be >= 1");
      if (!(sigma > 0.0)) throw CLI::ValidationError("--sigma must be > 0");
      return cmd_sample(alpha, mu, sigma, n, seed, resolve_format(format_flag, Format::table));
    }
    if (tabulate->parsed()) {
      if (!(sigma > 0.0)) throw CLI::ValidationError("--sigma must be > 0");
      return cmd_tabulate(alpha, mu, sigma, grid, resolve_format(format_flag, Format::table));
    }
    if (hazard->parsed())
      return cmd_hazard(alpha, grid, resolve_format(format_flag, Format::table));
    if (check->parsed()) return cmd_check(resolve_format(format_flag, Format::json));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const basn::DataError& e) {
    return emit_error(cmd_name, "data", e.what(), 2);
  } catch (const basn::EstimationError& e) {
    return emit_error(cmd_name, "estimation", e.what(), 3);
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

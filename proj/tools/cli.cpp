#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gegen/asymptotics.hpp"
#include "gegen/errors.hpp"
#include "gegen/extrema.hpp"
#include "gegen/gengeg.hpp"
#include "gegen/jacobi.hpp"
#include "gegen/quadrature.hpp"
#include "report_io.hpp"

namespace gegen::cli {

namespace {

enum class Family { jacobi, gegenbauer, gengeg, gengeg_orthonormal };

const std::map<std::string, Family> kFamilies = {
    {"jacobi", Family::jacobi},
    {"gegenbauer", Family::gegenbauer},
    {"gengeg", Family::gengeg},
    {"gengeg-orthonormal", Family::gengeg_orthonormal},
};

// Parsed flags shared by all subcommands.
struct RunConfig {
  std::string family_name;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  std::uint64_t n = 0;
  double t = 0.0;
  std::uint64_t n_min = 100;
  std::uint64_t n_max = 2000;
  std::uint64_t samples = kDefaultSamples;
  std::vector<std::uint64_t> n_values{50, 100, 200, 400, 800, 1600};
  std::uint64_t points = 101;
  std::uint64_t m = 8;
  std::string grid = "auto";
  double slope_tol = kDefaultSlopeTolerance;
  double band_tol = kDefaultBandTolerance;
  std::string out_path;
  std::string format_name;
};

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed15(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", value == 0.0 ? 0.0 : value);
  return buffer;
}

struct Flags {
  CLI::Option* alpha = nullptr;
  CLI::Option* beta = nullptr;
  CLI::Option* lambda = nullptr;
  CLI::Option* mu = nullptr;
};

void add_jacobi_flags(CLI::App* app, RunConfig& cfg, Flags& flags) {
  flags.alpha = app->add_option("--alpha", cfg.alpha, "Jacobi exponent of (1 - t), > -1");
  flags.beta = app->add_option("--beta", cfg.beta, "Jacobi exponent of (1 + t), > -1");
}

void add_gegen_flags(CLI::App* app, RunConfig& cfg, Flags& flags) {
  flags.lambda = app->add_option("--lambda", cfg.lambda, "lambda > -1/2");
  flags.mu = app->add_option("--mu", cfg.mu, "mu >= 0");
}

void add_output_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  app->add_option("--format", cfg.format_name, "csv or json (default: from --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
}

void require(const CLI::Option* opt, const std::string& what) {
  if (opt == nullptr || opt->count() == 0) throw UsageError(what + " is required");
}

void forbid(const CLI::Option* opt, const std::string& what, const std::string& family) {
  if (opt != nullptr && opt->count() > 0) {
    throw UsageError(what + " does not apply to family '" + family + "'");
  }
}

Format resolve_format(const RunConfig& cfg) {
  if (cfg.format_name == "json") return Format::json;
  if (cfg.format_name == "csv") return Format::csv;
  const auto& p = cfg.out_path;
  if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0) return Format::json;
  return Format::csv;
}

std::uint64_t resolve_grid(const RunConfig& cfg) {
  if (cfg.grid == "auto") return 0;
  std::uint64_t value = 0;
  std::istringstream in(cfg.grid);
  if (!(in >> value) || !in.eof() || value < 64) {
    throw UsageError("--grid must be 'auto' or an integer >= 64");
  }
  return value;
}

// Sends text to --out or to out. Returns false after reporting a write error.
bool deliver(const RunConfig& cfg, const std::string& text, std::ostream& out,
             std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    out.flush();
    return static_cast<bool>(out);
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << cfg.out_path << "' for writing\n";
    return false;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << cfg.out_path << "'\n";
    return false;
  }
  return true;
}

std::function<double(double)> family_function(const RunConfig& cfg, const Flags& flags) {
  const auto it = kFamilies.find(cfg.family_name);
  if (it == kFamilies.end()) throw UsageError("unknown family '" + cfg.family_name + "'");
  const std::uint64_t n = cfg.n;
  switch (it->second) {
    case Family::jacobi: {
      require(flags.alpha, "--alpha");
      require(flags.beta, "--beta");
      forbid(flags.lambda, "--lambda", cfg.family_name);
      forbid(flags.mu, "--mu", cfg.family_name);
      const JacobiParams p(cfg.alpha, cfg.beta);
      return [p, n](double t) { return jacobi_value(p, n, t); };
    }
    case Family::gegenbauer: {
      require(flags.lambda, "--lambda");
      forbid(flags.mu, "--mu", cfg.family_name);
      forbid(flags.alpha, "--alpha", cfg.family_name);
      forbid(flags.beta, "--beta", cfg.family_name);
      const GegenParams p(cfg.lambda, 0.0);
      return [p, n](double t) { return gengeg_eval(p, n, t); };
    }
    case Family::gengeg:
    case Family::gengeg_orthonormal: {
      require(flags.lambda, "--lambda");
      require(flags.mu, "--mu");
      forbid(flags.alpha, "--alpha", cfg.family_name);
      forbid(flags.beta, "--beta", cfg.family_name);
      const GegenParams p(cfg.lambda, cfg.mu);
      if (it->second == Family::gengeg) {
        return [p, n](double t) { return gengeg_eval(p, n, t); };
      }
      const OrthonormalGengeg poly(p, n);
      return [poly](double t) {
        if (!(t >= -1.0 && t <= 1.0)) throw domain_error("t must lie in [-1, 1]");
        return poly(t);
      };
    }
  }
  throw UsageError("unknown family");
}

void summarize(const AsymptoticReport& report, std::ostream& err) {
  err << report.label << ": " << to_string(report.verdict);
  if (std::isfinite(report.fitted_exponent)) {
    err << ", fitted exponent " << fixed15(report.fitted_exponent) << " (target "
        << fixed15(report.target_exponent) << ")";
  }
  err << ", ratio band [" << fixed15(report.ratio_min) << ", " << fixed15(report.ratio_max)
      << "]\n";
  for (const auto& part : report.parts) {
    err << "  ";
    if (!part.applicable) {
      err << part.label << ": skipped (" << part.note << ")\n";
      continue;
    }
    err << part.label << ": " << to_string(part.verdict);
    if (std::isfinite(part.fitted_exponent)) {
      err << ", fitted " << fixed15(part.fitted_exponent) << " (target "
          << fixed15(part.target_exponent) << ")";
    }
    err << ", ratio band [" << fixed15(part.ratio_min) << ", " << fixed15(part.ratio_max)
        << "]\n";
  }
}

int finish_report(const RunConfig& cfg, const AsymptoticReport& report, std::ostream& out,
                  std::ostream& err) {
  std::ostringstream text;
  emit_report(report, resolve_format(cfg), text);
  summarize(report, err);
  if (!deliver(cfg, text.str(), out, err)) return kExitVerificationFailed;
  return report.verdict == Verdict::pass ? kExitSuccess : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Jacobi and generalized Gegenbauer polynomials: evaluation, quadrature, "
               "and sup-norm asymptotics"};
  app.name("gegen");
  app.require_subcommand(1);

  std::vector<std::string> family_names;
  for (const auto& [name, _] : kFamilies) family_names.push_back(name);

  Flags eval_flags;
  auto* eval = app.add_subcommand("eval", "Evaluate one polynomial at one point");
  eval->add_option("--family", cfg.family_name, "Polynomial family")
      ->required()
      ->check(CLI::IsMember(family_names));
  add_jacobi_flags(eval, cfg, eval_flags);
  add_gegen_flags(eval, cfg, eval_flags);
  eval->add_option("--n", cfg.n, "Degree")->required();
  eval->add_option("--t", cfg.t, "Point in [-1, 1]")->required();

  Flags table_flags;
  auto* table = app.add_subcommand("table", "Tabulate a polynomial on a uniform t grid");
  table->add_option("--family", cfg.family_name, "Polynomial family")
      ->required()
      ->check(CLI::IsMember(family_names));
  add_jacobi_flags(table, cfg, table_flags);
  add_gegen_flags(table, cfg, table_flags);
  table->add_option("--n", cfg.n, "Degree")->required();
  table->add_option("--points", cfg.points, "Number of grid points (>= 2)")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10000000}));
  add_output_flags(table, cfg);

  Flags quad_flags;
  auto* quad = app.add_subcommand("quadrature", "Print an m-point Gauss-Jacobi rule");
  add_jacobi_flags(quad, cfg, quad_flags);
  quad_flags.alpha->required();
  quad_flags.beta->required();
  quad->add_option("--m", cfg.m, "Number of nodes")->required();
  add_output_flags(quad, cfg);

  auto add_sweep_flags = [&](CLI::App* sub, Flags& flags) {
    add_gegen_flags(sub, cfg, flags);
    flags.lambda->required();
    flags.mu->required();
    sub->add_option("--n-min", cfg.n_min, "Smallest index");
    sub->add_option("--n-max", cfg.n_max, "Largest index");
    sub->add_option("--samples", cfg.samples, "Number of log-spaced indices");
    sub->add_option("--grid", cfg.grid, "Sup-norm grid size or 'auto'");
    sub->add_option("--slope-tol", cfg.slope_tol, "Allowed |fitted - target| exponent");
    sub->add_option("--band-tol", cfg.band_tol, "Allowed ratio_max / ratio_min");
    add_output_flags(sub, cfg);
  };

  Flags asym_flags;
  auto* asym = app.add_subcommand(
      "asymptotics", "Sweep sup norms of orthonormal generalized Gegenbauer polynomials");
  add_sweep_flags(asym, asym_flags);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);

  Flags thm_flags;
  auto* thm = verify->add_subcommand("theorem1", "Sup-norm growth n^max(lambda, mu)");
  add_sweep_flags(thm, thm_flags);

  Flags lemma_flags;
  auto* lemma = verify->add_subcommand("lemma1", "sin(theta/2)-weighted Jacobi maxima");
  add_jacobi_flags(lemma, cfg, lemma_flags);
  lemma_flags.alpha->required();
  lemma_flags.beta->required();
  lemma->add_option("--n-values", cfg.n_values, "Degrees (strictly increasing)")
      ->delimiter(',');
  lemma->add_option("--band-tol", cfg.band_tol, "Allowed growth of the ratio");
  add_output_flags(lemma, cfg);

  Flags facts_flags;
  auto* facts = verify->add_subcommand("jacobi-facts", "Endpoint, half-segment, special-point "
                                                       "and theta-region estimates");
  add_jacobi_flags(facts, cfg, facts_flags);
  facts_flags.alpha->required();
  facts_flags.beta->required();
  facts->add_option("--n-values", cfg.n_values, "Degrees (strictly increasing)")
      ->delimiter(',');
  facts->add_option("--band-tol", cfg.band_tol, "Allowed ratio band");
  add_output_flags(facts, cfg);

  Flags coef_flags;
  auto* coef = verify->add_subcommand("coefficients", "Growth of orthonormalizing coefficients");
  add_gegen_flags(coef, cfg, coef_flags);
  coef_flags.lambda->required();
  coef_flags.mu->required();
  coef->add_option("--n-min", cfg.n_min, "Smallest index");
  coef->add_option("--n-max", cfg.n_max, "Largest index");
  coef->add_option("--samples", cfg.samples, "Number of log-spaced indices");
  coef->add_option("--band-tol", cfg.band_tol, "Allowed ratio_max / ratio_min");
  add_output_flags(coef, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const auto f = family_function(cfg, eval_flags);
      out << fixed15(f(cfg.t)) << '\n';
      return kExitSuccess;
    }
    if (table->parsed()) {
      const auto f = family_function(cfg, table_flags);
      std::string text = "t,value\n";
      const double last = static_cast<double>(cfg.points - 1);
      for (std::uint64_t i = 0; i < cfg.points; ++i) {
        const double t = (i + 1 == cfg.points) ? 1.0 : -1.0 + 2.0 * static_cast<double>(i) / last;
        text += fixed15(t) + "," + fixed15(f(t)) + "\n";
      }
      return deliver(cfg, text, out, err) ? kExitSuccess : kExitVerificationFailed;
    }
    if (quad->parsed()) {
      const auto rule = gauss_jacobi_rule(JacobiParams(cfg.alpha, cfg.beta), cfg.m);
      std::string text;
      if (resolve_format(cfg) == Format::json) {
        text = "{\"alpha\": " + format_shortest(cfg.alpha) +
               ", \"beta\": " + format_shortest(cfg.beta) + ", \"nodes\": [";
        for (std::size_t i = 0; i < rule.size(); ++i) {
          text += (i ? ", " : "") + format_shortest(rule.nodes()[i]);
        }
        text += "], \"weights\": [";
        for (std::size_t i = 0; i < rule.size(); ++i) {
          text += (i ? ", " : "") + format_shortest(rule.weights()[i]);
        }
        text += "]}\n";
      } else {
        text = "node,weight\n";
        for (std::size_t i = 0; i < rule.size(); ++i) {
          text += fixed15(rule.nodes()[i]) + "," + fixed15(rule.weights()[i]) + "\n";
        }
      }
      return deliver(cfg, text, out, err) ? kExitSuccess : kExitVerificationFailed;
    }
    if (asym->parsed() || thm->parsed()) {
      const GegenParams params(cfg.lambda, cfg.mu);
      SweepOptions options;
      options.grid_points = resolve_grid(cfg);
      const auto report = verify_theorem1(params, cfg.n_min, cfg.n_max, cfg.samples,
                                          cfg.slope_tol, cfg.band_tol, options);
      if (thm->parsed()) {
        std::vector<std::uint64_t> ns;
        for (const auto& r : report.records) ns.push_back(r.n);
        std::size_t index = 0;
        for (const auto& w : theorem1_witnesses(params, ns)) {
          while (report.records[index].n != w.n) ++index;
          const double sup = report.records[index].sup_norm;
          const double floor_value = std::max(w.endpoint_value, w.special_point_value);
          if (sup < floor_value * (1.0 - 1e-9)) {
            err << "lower-bound witness exceeds measured sup norm at n = " << w.n << '\n';
            return kExitVerificationFailed;
          }
        }
      }
      return finish_report(cfg, report, out, err);
    }
    if (lemma->parsed()) {
      const auto report = verify_lemma1(JacobiParams(cfg.alpha, cfg.beta), cfg.n_values,
                                        cfg.band_tol);
      return finish_report(cfg, report, out, err);
    }
    if (facts->parsed()) {
      const auto report = verify_jacobi_facts(JacobiParams(cfg.alpha, cfg.beta), cfg.n_values,
                                              cfg.band_tol);
      return finish_report(cfg, report, out, err);
    }
    if (coef->parsed()) {
      if (!coef->get_option("--n-min")->count()) cfg.n_min = 100;
      if (!coef->get_option("--n-max")->count()) cfg.n_max = 100000;
      const auto counts = log_spaced_counts(cfg.n_min, cfg.n_max, cfg.samples);
      const auto report =
          verify_coefficient_growth(GegenParams(cfg.lambda, cfg.mu), counts, cfg.band_tol);
      return finish_report(cfg, report, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gegen::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace gegen::cli

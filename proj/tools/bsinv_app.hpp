#ifndef BSINV_TOOLS_APP_HPP
#define BSINV_TOOLS_APP_HPP

// Command-line front end: `invert`, `table` and `sweep-r`.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsinv/bsinv.hpp"

namespace bsinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Method { Wa, Cos, Bromwich };

struct ExperimentConfig {
  std::string function = "f1";
  Params params;
  std::optional<double> beta;
  Method method = Method::Wa;
  int order = 0;
  int scale = 1;
  int terms = 64;
  std::optional<Interval> interval;
  double radius = kDefaultRadius;
  std::optional<int> panels;
  std::size_t grid = kDefaultGridPoints;
  bool interior = false;
  unsigned threads = 1;
  std::optional<double> abscissa;
  std::optional<double> step;
  std::string out;
  std::string coeffs_out;
  ReportFormat format = ReportFormat::Csv;
};

/// Result of one experiment. `expansion` is set for the wavelet method.
struct Outcome {
  ErrorReport report;
  std::optional<WaveletExpansion> expansion;
};

inline bool is_laplace_function(const std::string& name) {
  for (const auto& n : laplace_catalog_names()) {
    if (n == name) return true;
  }
  return false;
}

inline std::string format_log(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline Interval parse_interval(const std::string& text) {
  std::istringstream is(text);
  Interval iv;
  char comma = 0;
  if (!(is >> iv.a >> comma >> iv.b) || comma != ',' || !(is >> std::ws).eof()) {
    throw ConfigError("--interval expects 'a,b', got '" + text + "'");
  }
  if (!(iv.a < iv.b)) throw ConfigError("--interval requires a < b");
  return iv;
}

inline Outcome run_experiment(const ExperimentConfig& cfg) {
  const bool laplace = is_laplace_function(cfg.function);
  GridSpec grid{cfg.grid, !cfg.interior};
  if (cfg.grid < 2) throw ConfigError("--grid must be at least 2");

  RealFunction reference;
  Interval iv;
  SpectralFunction transform;
  LaplaceEntry lentry;
  const double beta = cfg.beta.value_or(0.0);
  if (laplace) {
    if (!cfg.params.empty()) throw ConfigError("--alpha/--sigma do not apply to " + cfg.function);
    lentry = laplace_catalog(cfg.function);
    reference = lentry.reference;
    iv = cfg.interval.value_or(lentry.natural_interval);
    transform = laplace_to_fourier({lentry.ltransform, beta});
  } else {
    if (cfg.beta) throw ConfigError("--beta only applies to Laplace functions");
    if (cfg.method == Method::Bromwich) {
      throw ConfigError("the bromwich method needs a Laplace function (lexp, lunit)");
    }
    CatalogEntry entry;
    try {
      entry = catalog(cfg.function, cfg.params);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    reference = entry.reference;
    iv = cfg.interval.value_or(entry.natural_interval);
    transform = entry.transform;
  }
  // Undo the damping h = f e^{-beta x} for Laplace inputs.
  auto undamp = [laplace, beta](double x) { return laplace ? std::exp(beta * x) : 1.0; };

  Outcome result;
  switch (cfg.method) {
    case Method::Wa: {
      const SplineSpec spec{cfg.order, cfg.scale, iv};
      QuadratureConfig q = default_quadrature(spec);
      q.radius = cfg.radius;
      if (cfg.panels) q.panels = *cfg.panels;
      q.threads = cfg.threads;
      try {
        validate(spec);
        validate(q);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      WaveletExpansion ex = recover_coefficients(transform, spec, q);
      result.report = error_grid(
          [&](double x) { return eval_expansion(ex, x) * undamp(x); }, reference, iv, grid,
          spec.label(), true);
      result.expansion = std::move(ex);
      break;
    }
    case Method::Cos: {
      if (cfg.terms < 1) throw ConfigError("--terms must be at least 1");
      const CosExpansion ce = cos_coefficients(transform, iv, static_cast<std::size_t>(cfg.terms));
      result.report = error_grid([&](double x) { return eval_cos_series(ce, x) * undamp(x); },
                                 reference, iv, grid, ce.label(), true);
      break;
    }
    case Method::Bromwich: {
      if (cfg.beta) throw ConfigError("--beta does not apply to the bromwich method");
      // x = 0 is outside the Bromwich formula; fall back to interior nodes there.
      if (iv.a <= 0.0) grid.include_endpoints = false;
      if (iv.b <= 0.0) throw ConfigError("bromwich needs an interval reaching x > 0");
      BromwichParams bp = bromwich_defaults(iv.b, lentry.growth);
      if (cfg.abscissa) bp.sigma = *cfg.abscissa;
      if (cfg.step) bp.h = *cfg.step;
      if (cfg.terms > 0) bp.n_terms = static_cast<std::size_t>(cfg.terms);
      if (!(bp.h > 0.0)) throw ConfigError("--step must be positive");
      auto lt = lentry.ltransform;
      result.report = error_grid(
          [&](double x) { return bromwich_trapezoid(lt, bp.sigma, bp.h, x, bp.n_terms); },
          reference, iv, grid, "BROMWICH", true);
      break;
    }
  }
  return result;
}

inline void write_coefficients(const WaveletExpansion& ex, std::ostream& os) {
  os << "k,coefficient\n";
  char buf[40];
  for (std::size_t k = 0; k < ex.coeffs.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", ex.coeffs[k]);
    os << k << ',' << buf << '\n';
  }
  for (const auto& note : ex.notes) os << "# " << note << '\n';
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  return f;
}

inline int cmd_invert(const ExperimentConfig& cfg, std::ostream& out) {
  Outcome res = run_experiment(cfg);
  if (!cfg.out.empty()) {
    auto f = open_output(cfg.out);
    emit_report(res.report, cfg.format, f);
  }
  if (res.expansion) {
    std::string path = cfg.coeffs_out;
    if (path.empty() && !cfg.out.empty()) path = cfg.out + ".coeffs.csv";
    if (!path.empty()) {
      auto f = open_output(path);
      write_coefficients(*res.expansion, f);
    }
  }
  out << res.report.method_label << " min_log10=" << format_log(res.report.min_log10_abs_error)
      << " max_log10=" << format_log(res.report.max_log10_abs_error) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Tables

inline const std::vector<double>& prefactor_radii() {
  static const std::vector<double> r{0.9000, 0.9100, 0.9200, 0.9300, 0.9400, 0.9500,
                                     0.9600, 0.9700, 0.9800, 0.9900, 0.9990, 0.9991,
                                     0.9993, 0.9995, 0.9997, 0.9999};
  return r;
}

/// (M r^k)^{-1} with M = 2^m and k = 2^m - 1.
inline double table_prefactor(double r, int m) {
  const SplineSpec spec{0, m, {0.0, 1.0}};
  const QuadratureConfig q{r, 1 << m, kDefaultEta, 1};
  return error_budget(spec, q, (1 << m) - 1).prefactor;
}

struct TableRow {
  std::string method;
  double param = 0.0;
  double min_log10 = 0.0;
  double max_log10 = 0.0;
};

/// Rows of the exponential (f2) or Gaussian (f5) comparison tables.
inline std::vector<TableRow> error_table(const std::string& function, const std::vector<double>& values,
                                         const std::vector<std::pair<int, int>>& wa,
                                         const std::vector<int>& cos,
                                         std::optional<GridSpec> grid_override, unsigned threads) {
  std::vector<TableRow> rows;
  const std::string key = function == "f2" ? "alpha" : "sigma";
  for (const auto& [j, m] : wa) {
    for (double v : values) {
      const CatalogEntry e = catalog(function, {{key, v}});
      const GridSpec grid = grid_override.value_or(interior_grid(e.natural_interval));
      const SplineSpec spec{j, m, e.natural_interval};
      QuadratureConfig q = default_quadrature(spec);
      q.threads = threads;
      const WaveletExpansion ex = recover_coefficients(e.transform, spec, q);
      const ErrorReport rep = error_grid([&](double x) { return eval_expansion(ex, x); },
                                         e.reference, e.natural_interval, grid, spec.label());
      rows.push_back({spec.label(), v, rep.min_log10_abs_error, rep.max_log10_abs_error});
    }
  }
  for (int n : cos) {
    for (double v : values) {
      const CatalogEntry e = catalog(function, {{key, v}});
      const GridSpec grid = grid_override.value_or(interior_grid(e.natural_interval));
      const CosExpansion ce = cos_coefficients(e.transform, e.natural_interval, n);
      const ErrorReport rep = error_grid([&](double x) { return eval_cos_series(ce, x); },
                                         e.reference, e.natural_interval, grid, ce.label());
      rows.push_back({ce.label(), v, rep.min_log10_abs_error, rep.max_log10_abs_error});
    }
  }
  return rows;
}

inline std::vector<TableRow> exp_errors_table(std::optional<GridSpec> grid = {},
                                              unsigned threads = 1) {
  return error_table("f2", {50.0, 500.0}, {{0, 6}, {1, 5}, {1, 9}, {2, 4}},
                     {64, 128, 256, 512, 1024}, grid, threads);
}

inline std::vector<TableRow> gauss_errors_table(std::optional<GridSpec> grid = {},
                                                unsigned threads = 1) {
  return error_table("f5", {0.1}, {{0, 6}, {1, 5}, {2, 4}}, {32, 64}, grid, threads);
}

inline int cmd_table(const std::string& which, const std::string& csv_path,
                     std::optional<GridSpec> grid, unsigned threads, std::ostream& out) {
  const std::string path = csv_path.empty() ? "table_" + which + ".csv" : csv_path;
  std::ostringstream csv;
  char buf[64];
  if (which == "prefactor") {
    out << "Pre-factor (M r^k)^{-1}, M = 2^m, k = 2^m - 1\n";
    out << std::left << std::setw(8) << "r" << std::setw(14) << "m=8" << std::setw(14) << "m=9"
        << "m=10\n";
    csv << "r,m8,m9,m10\n";
    for (double r : prefactor_radii()) {
      std::snprintf(buf, sizeof buf, "%.4f", r);
      out << std::setw(8) << buf;
      csv << buf;
      for (int m : {8, 9, 10}) {
        std::snprintf(buf, sizeof buf, "%.4e", table_prefactor(r, m));
        out << std::setw(14) << buf;
        csv << ',' << buf;
      }
      out << '\n';
      csv << '\n';
    }
  } else if (which == "exp_errors" || which == "gauss_errors") {
    const bool exp = which == "exp_errors";
    const auto rows = exp ? exp_errors_table(grid, threads) : gauss_errors_table(grid, threads);
    const char* key = exp ? "alpha" : "sigma";
    out << (exp ? "Errors for f2 = exp(-alpha|x|) on [-1,1]\n"
                : "Errors for f5 (Gaussian) on [-1,1]\n");
    out << std::left << std::setw(10) << "method" << std::setw(8) << key << std::setw(14)
        << "min_log10" << "max_log10\n";
    csv << "method," << key << ",min_log10,max_log10\n";
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%g", row.param);
      out << std::setw(10) << row.method << std::setw(8) << buf << std::setw(14)
          << format_log(row.min_log10) << format_log(row.max_log10) << '\n';
      csv << row.method << ',' << buf << ',' << format_log(row.min_log10) << ','
          << format_log(row.max_log10) << '\n';
    }
  } else {
    throw ConfigError("unknown table '" + which + "' (prefactor, exp_errors, gauss_errors)");
  }
  auto f = open_output(path);
  f << csv.str();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Radius sweep

struct SweepConfig {
  ExperimentConfig base;
  double r_min = 0.9;
  double r_max = 1.1;
  int steps = 21;
};

/// Radii r_min + i (r_max - r_min)/(steps - 1); r = 1 is skipped.
inline std::vector<double> sweep_radii(double r_min, double r_max, int steps) {
  if (!(r_min > 0.0) || !(r_min < r_max || steps == 1)) {
    throw ConfigError("sweep needs 0 < r_min < r_max");
  }
  if (steps < 1) throw ConfigError("--steps must be at least 1");
  std::vector<double> radii;
  for (int i = 0; i < steps; ++i) {
    const double r = steps == 1 ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
    if (std::abs(r - 1.0) < 1e-12) continue;
    radii.push_back(r);
  }
  return radii;
}

inline void sweep_r(const SweepConfig& sc, std::ostream& os) {
  os << "r,x,log10_abs_error\n";
  char buf[96];
  for (double r : sweep_radii(sc.r_min, sc.r_max, sc.steps)) {
    ExperimentConfig cfg = sc.base;
    cfg.method = Method::Wa;
    cfg.radius = r;
    const Outcome res = run_experiment(cfg);
    for (const auto& p : *res.report.per_point) {
      const double l = p.abs_error > 0.0 ? std::log10(p.abs_error)
                                         : -std::numeric_limits<double>::infinity();
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,", r, p.x);
      os << buf << format_log(l) << '\n';
    }
  }
}

inline int cmd_sweep_r(const SweepConfig& sc, std::ostream& out) {
  if (sc.base.out.empty()) {
    sweep_r(sc, out);
  } else {
    auto f = open_output(sc.base.out);
    sweep_r(sc, f);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument handling

/// Appends `--key value` pairs from a flat key=value file for every key not
/// already given on the command line. Blank lines and '#' comments are skipped.
inline std::vector<std::string> merge_config_file(std::vector<std::string> args) {
  std::string path;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (path.empty()) return kept;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : kept) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos
                                                            ? std::string::npos
                                                            : a.find('=') - 2));
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (given.count(key) != 0U) continue;
    kept.push_back("--" + key);
    kept.push_back(value);
  }
  return kept;
}

inline void add_function_options(CLI::App& app, ExperimentConfig& cfg,
                                 std::optional<double>& alpha, std::optional<double>& sigma) {
  app.add_option("--function", cfg.function, "f1..f5 (Fourier) or lexp, lunit (Laplace)");
  app.add_option("--alpha", alpha, "decay rate of f2");
  app.add_option("--sigma", sigma, "standard deviation of f5");
  app.add_option("--beta", cfg.beta, "damping for Laplace inputs, h = f e^{-beta x}");
  app.add_option("--order", cfg.order, "B-spline order j");
  app.add_option("--scale", cfg.scale, "scale m");
  app.add_option("--radius", cfg.radius, "circle radius r");
  app.add_option("--panels", cfg.panels, "trapezoid panels M (default (j+1) 2^m)");
  app.add_option("--grid", cfg.grid, "evaluation grid size");
  app.add_flag("--interior", cfg.interior, "use interior grid nodes only");
  app.add_option("--threads", cfg.threads, "worker threads for coefficient recovery");
  app.add_option("--out", cfg.out, "output path");
}

inline void collect_params(ExperimentConfig& cfg, const std::optional<double>& alpha,
                           const std::optional<double>& sigma) {
  if (alpha) cfg.params["alpha"] = *alpha;
  if (sigma) cfg.params["sigma"] = *sigma;
}

inline int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"B-spline wavelet inversion of Fourier and Laplace transforms"};
  app.require_subcommand(1);

  ExperimentConfig inv;
  std::optional<double> inv_alpha, inv_sigma;
  std::string method = "wa", format = "csv", interval;
  auto* invert = app.add_subcommand("invert", "invert one transform and report grid errors");
  add_function_options(*invert, inv, inv_alpha, inv_sigma);
  invert->add_option("--method", method, "wa, cos or bromwich")
      ->check(CLI::IsMember({"wa", "cos", "bromwich"}));
  invert->add_option("--terms", inv.terms, "COS terms N, or Bromwich terms");
  invert->add_option("--interval", interval, "approximation interval a,b");
  invert->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  invert->add_option("--coeffs", inv.coeffs_out, "coefficient CSV (default <out>.coeffs.csv)");
  invert->add_option("--abscissa", inv.abscissa, "Bromwich abscissa sigma");
  invert->add_option("--step", inv.step, "Bromwich step h");

  std::string which, table_out;
  std::optional<std::size_t> table_grid;
  bool table_interior = false;
  unsigned table_threads = 1;
  auto* table = app.add_subcommand("table", "regenerate a comparison table");
  table->add_option("which", which, "prefactor, exp_errors or gauss_errors")->required();
  table->add_option("--out", table_out, "CSV mirror (default table_<which>.csv)");
  table->add_option("--grid", table_grid, "grid size (default: interior nodes at step 1e-3)");
  table->add_flag("--interior", table_interior, "with --grid: interior nodes only");
  table->add_option("--threads", table_threads, "worker threads");

  SweepConfig sweep;
  std::optional<double> sw_alpha, sw_sigma;
  std::string sw_interval;
  auto* sw = app.add_subcommand("sweep-r", "log-error surface over (r, x)");
  add_function_options(*sw, sweep.base, sw_alpha, sw_sigma);
  sw->add_option("--interval", sw_interval, "approximation interval a,b");
  sw->add_option("--r-min", sweep.r_min, "smallest radius");
  sw->add_option("--r-max", sweep.r_max, "largest radius");
  sw->add_option("--steps", sweep.steps, "number of radii");

  try {
    std::vector<std::string> args = merge_config_file(raw_args);
    std::vector<const char*> argv{"bsinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitConfig;
    }

    if (invert->parsed()) {
      collect_params(inv, inv_alpha, inv_sigma);
      inv.method = method == "wa" ? Method::Wa : method == "cos" ? Method::Cos : Method::Bromwich;
      inv.format = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
      if (!interval.empty()) inv.interval = parse_interval(interval);
      if (inv.method == Method::Bromwich && invert->count("--terms") == 0) inv.terms = 0;
      return cmd_invert(inv, out);
    }
    if (table->parsed()) {
      std::optional<GridSpec> grid;
      if (table_grid) grid = GridSpec{*table_grid, !table_interior};
      return cmd_table(which, table_out, grid, table_threads, out);
    }
    collect_params(sweep.base, sw_alpha, sw_sigma);
    if (!sw_interval.empty()) sweep.base.interval = parse_interval(sw_interval);
    return cmd_sweep_r(sweep, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace bsinv::cli

#endif  // BSINV_TOOLS_APP_HPP

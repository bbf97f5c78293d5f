// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Tolerances and published reference values are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bsinv/bsinv.hpp"
#include "oracles.hpp"

using namespace bsinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  bool ok = true;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    ok = ok && cond;
    details.push_back(std::string(cond ? "  ok   " : "  FAIL ") + what);
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool report(Criterion& c, double seconds) {
  c.check(seconds < c.budget_s, fmt("runtime %.3f s < %.0f s", seconds, c.budget_s));
  std::printf("%s criterion %d: %s (%.3f s)\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
              seconds);
  for (const auto& d : c.details) std::printf("%s\n", d.c_str());
  std::fflush(stdout);
  return c.ok;
}

template <typename F>
bool run_criterion(int id, const std::string& title, double budget_s, F&& body) {
  Criterion c{id, title, budget_s};
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report(c, seconds);
}

WaveletExpansion wa(const CatalogEntry& e, int j, int m) {
  const SplineSpec spec{j, m, e.natural_interval};
  return recover_coefficients(e.transform, spec, default_quadrature(spec));
}

ErrorReport wa_report(const CatalogEntry& e, int j, int m, GridSpec grid) {
  const WaveletExpansion ex = wa(e, j, m);
  return error_grid([&](double x) { return eval_expansion(ex, x); }, e.reference,
                    e.natural_interval, grid, ex.spec.label());
}

ErrorReport cos_report(const CatalogEntry& e, int n, GridSpec grid) {
  const CosExpansion ce = cos_coefficients(e.transform, e.natural_interval, n);
  return error_grid([&](double x) { return eval_cos_series(ce, x); }, e.reference,
                    e.natural_interval, grid, ce.label());
}

struct PublishedRow {
  const char* label;
  int j, m;  // j < 0 marks a COS row with m terms
  double min_log, max_log;
};

ErrorReport row_report(const CatalogEntry& e, const PublishedRow& row, GridSpec grid) {
  return row.j < 0 ? cos_report(e, row.m, grid) : wa_report(e, row.j, row.m, grid);
}

// Max error on the default closed 4097-point grid. Min error on interior nodes
// at spacing 1e-3: the closed grid puts x = +-1 in the set, where f2 is e^{-alpha}
// and the reported minimum is dominated by that single endpoint.
void check_table_row(Criterion& c, const CatalogEntry& e, const PublishedRow& row,
                     double max_tol, double min_tol, const std::string& tag) {
  const ErrorReport closed = row_report(e, row, GridSpec{kDefaultGridPoints, true});
  const ErrorReport inner = row_report(e, row, interior_grid(e.natural_interval));
  c.check(std::abs(closed.max_log10_abs_error - row.max_log) <= max_tol,
          tag + fmt(" max %.6f vs %.6f", closed.max_log10_abs_error, row.max_log));
  c.check(std::abs(inner.min_log10_abs_error - row.min_log) <= min_tol,
          tag + fmt(" min %.6f vs %.6f (closed-grid min %.3f)", inner.min_log10_abs_error,
                    row.min_log, closed.min_log10_abs_error));
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "f3 coefficient recovery, WA1-1 on [0,2]", 1.0, [](Criterion& c) {
    const WaveletExpansion ex = wa(catalog("f3"), 1, 1);
    const auto& k = ex.coeffs;
    c.check(k.size() == 3, "three coefficients");
    c.check(std::abs(k[0] - 2.0) <= 1e-6, fmt("|c0 - 2| = %.3e <= 1e-6", std::abs(k[0] - 2.0)));
    c.check(std::abs(k[1]) <= 1e-6, fmt("|c1| = %.3e <= 1e-6", std::abs(k[1])));
    c.check(std::abs(k[2]) <= 1e-6, fmt("|c2| = %.3e <= 1e-6", std::abs(k[2])));
    // Published magnitudes 5.605010e-8 and 4.645665e-8; within one order means no larger than 10x.
    c.check(std::abs(k[1]) <= 10 * 5.605010e-8 && std::abs(k[2]) <= 10 * 4.645665e-8,
            fmt("magnitudes %.3e, %.3e within one order of 5.6e-8, 4.6e-8 (upper bound)",
                std::abs(k[1]), std::abs(k[2])));
  });

  all &= run_criterion(2, "f4 combination recovery, WA1-2 on [-1,1]", 1.0, [](Criterion& c) {
    const WaveletExpansion ex = wa(catalog("f4"), 1, 2);
    double worst = 0.0;
    for (std::size_t k = 0; k < ex.coeffs.size(); ++k) {
      const double target = k <= 6 ? std::exp(-static_cast<double>(k)) : 0.0;
      worst = std::max(worst, std::abs(ex.coeffs[k] - target));
    }
    c.check(worst <= 1e-6, fmt("max |e^-k - c_k| = %.3e <= 1e-6", worst));
    c.check(worst <= 100 * 2.681058e-8,
            fmt("%.3e within two orders of 2.681058e-8 (upper bound)", worst));
  });

  all &= run_criterion(3, "optimal radius values", 1.0, [](Criterion& c) {
    const double r10 = optimal_radius(1, 0, 2, 16.0);
    const double r11 = optimal_radius(1, 1, 2, 16.0);
    c.check(std::abs(r10 / 7.740368e-17 - 1.0) < 1e-6, fmt("r_{1,0} = %.7e", r10));
    c.check(std::abs(r11 / 4.398968e-9 - 1.0) < 1e-6, fmt("r_{1,1} = %.7e", r11));
  });

  all &= run_criterion(4, "pre-factor table, 48 cells to 4 significant figures", 1.0,
                       [](Criterion& c) {
    struct Row {
      double r;
      const char* cells[3];
    };
    const Row rows[] = {
        {0.9000, {"1.8194e+09", "4.7077e+20", "6.3040e+43"}},
        {0.9100, {"1.0869e+08", "1.6618e+18", "7.7688e+38"}},
        {0.9200, {"6.6968e+06", "6.2395e+15", "1.0833e+34"}},
        {0.9300, {"4.2522e+05", "2.4885e+13", "1.7047e+29"}},
        {0.9400, {"2.7807e+04", "1.0529e+11", "3.0193e+24"}},
        {0.9500, {"1.8717e+03", "4.7203e+08", "6.0042e+19"}},
        {0.9600, {"1.2960e+02", "2.2394e+06", "1.3373e+15"}},
        {0.9700, {"9.2550e+00", "1.1230e+04", "3.3283e+10"}},
        {0.9800, {"6.7470e-01", "5.9457e+01", "9.2347e+05"}},
        {0.9900, {"5.0674e-02", "3.3201e-01", "2.8503e+01"}},
        {0.9990, {"5.0415e-03", "3.2566e-03", "2.7177e-03"}},
        {0.9991, {"4.9145e-03", "3.0942e-03", "2.4532e-03"}},
        {0.9993, {"4.6699e-03", "2.7934e-03", "1.9990e-03"}},
        {0.9995, {"4.4376e-03", "2.5219e-03", "1.6289e-03"}},
        {0.9997, {"4.2169e-03", "2.2768e-03", "1.3274e-03"}},
        {0.9999, {"4.0072e-03", "2.0555e-03", "1.0818e-03"}},
    };
    int matched = 0;
    for (const Row& row : rows) {
      for (int i = 0; i < 3; ++i) {
        const int m = 8 + i;
        const int n = 1 << m;
        const double v =
            error_budget(SplineSpec{0, m, {0.0, 1.0}}, QuadratureConfig{row.r, n, kDefaultEta, 1},
                         n - 1)
                .prefactor;
        // Agreement to 4 significant figures: the published mantissa is within
        // one unit of its last digit of the computed value.
        const double published = std::stod(row.cells[i]);
        const double unit = std::pow(10.0, std::floor(std::log10(published)) - 3);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6e", v);
        if (std::abs(v - published) <= unit) {
          ++matched;
        } else {
          c.check(false, fmt("r = %.4f, m = %.0f: ", row.r, m) + buf + " vs " + row.cells[i]);
        }
      }
    }
    c.check(matched == 48, fmt("%.0f of 48 cells match", matched));
  });

  all &= run_criterion(5, "f2 error table (alpha 50 and 500)", 120.0, [](Criterion& c) {
    const PublishedRow a50[] = {
        {"WA0-6", 0, 6, -2.928931, -0.374819},     {"WA1-5", 1, 5, -7.719564, -0.857977},
        {"WA1-9", 1, 9, -12.704332, -3.107169},    {"WA2-4", 2, 4, -5.129268, -0.367390},
        {"COS-64", -1, 64, -5.673413, -0.526046},  {"COS-128", -1, 128, -5.483920, -0.805937},
        {"COS-256", -1, 256, -6.093322, -1.102053}, {"COS-512", -1, 512, -7.488787, -1.402252},
        {"COS-1024", -1, 1024, -7.454768, -1.703285}};
    const PublishedRow a500[] = {
        {"WA0-6", 0, 6, -2.523483, -0.040001},     {"WA1-5", 1, 5, -8.119854, -0.083319},
        {"WA1-9", 1, 9, -9.290222, -1.194033},     {"WA2-4", 2, 4, -5.624545, -0.036573},
        {"COS-64", -1, 64, -5.825399, -0.057691},  {"COS-128", -1, 128, -5.305269, -0.120147},
        {"COS-256", -1, 256, -5.898013, -0.244112}, {"COS-512", -1, 512, -6.433619, -0.450188},
        {"COS-1024", -1, 1024, -6.500191, -0.716606}};
    for (double alpha : {50.0, 500.0}) {
      const CatalogEntry e = catalog("f2", {{"alpha", alpha}});
      for (const PublishedRow& row : alpha == 50.0 ? a50 : a500) {
        check_table_row(c, e, row, 0.3, 1.0, fmt("alpha=%.0f ", alpha) + row.label);
      }
    }
  });

  all &= run_criterion(6, "f5 error table (sigma 0.1)", 30.0, [](Criterion& c) {
    const PublishedRow rows[] = {{"WA0-6", 0, 6, -16.090813, -0.428258},
                                 {"WA1-5", 1, 5, -11.687910, -1.482131},
                                 {"WA2-4", 2, 4, -9.285967, -2.450365},
                                 {"COS-32", -1, 32, -9.392864, -5.390718},
                                 {"COS-64", -1, 64, -17.699992, -7.530656}};
    const CatalogEntry e = catalog("f5", {{"sigma", 0.1}});
    std::vector<double> max_err;
    for (const PublishedRow& row : rows) {
      const ErrorReport rep = row_report(e, row, GridSpec{kDefaultGridPoints, true});
      max_err.push_back(rep.max_log10_abs_error);
      c.check(std::abs(rep.max_log10_abs_error - row.max_log) <= 0.3,
              std::string(row.label) + fmt(" max %.6f vs %.6f", rep.max_log10_abs_error, row.max_log));
    }
    const auto best = std::min_element(max_err.begin(), max_err.end()) - max_err.begin();
    const auto worst = std::max_element(max_err.begin(), max_err.end()) - max_err.begin();
    c.check(best == 4 && worst == 0, "ordering: COS-64 best, WA0-6 worst");
  });

  all &= run_criterion(7, "step function: WA0-1 exact, COS-2048 shows Gibbs", 30.0,
                       [](Criterion& c) {
    const CatalogEntry f1 = catalog("f1");
    const WaveletExpansion ex = wa(f1, 0, 1);
    c.check(ex.coeffs.size() == 2, "two coefficients");
    const ErrorReport w = error_grid([&](double x) { return eval_expansion(ex, x); },
                                     f1.reference, f1.natural_interval);
    c.check(w.exact() || w.max_log10_abs_error <= -6.0,
            fmt("WA0-1 max log10 error %.3f <= -6", w.max_log10_abs_error));
    const CosExpansion ce = cos_coefficients(f1.transform, f1.natural_interval, 2048);
    double near_jump = 0.0;
    const GridSpec grid{kDefaultGridPoints, true};
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      const double x = grid.point(f1.natural_interval, i);
      if (std::abs(x - 0.5) <= 0.01) {
        near_jump = std::max(near_jump, std::abs(eval_cos_series(ce, x) - f1.reference(x)));
      }
    }
    c.check(near_jump >= 1e-2, fmt("COS-2048 max error near x = 1/2: %.3e >= 1e-2", near_jump));
  });

  all &= run_criterion(8, "property suites", 120.0, [](Criterion& c) {
    // bspline
    double pou = 0.0;
    for (int j = 0; j <= 4; ++j) {
      for (int i = 0; i <= 5000; ++i) {
        const double x = 10.0 * i / 5000.0;
        double s = 0.0;
        for (int k = static_cast<int>(std::floor(x)) - j; k <= static_cast<int>(std::floor(x)); ++k)
          s += cardinal_bspline(j, x - k);
        pou = std::max(pou, std::abs(s - 1.0));
      }
    }
    c.check(pou <= 1e-12, fmt("partition of unity, worst %.2e", pou));

    double norm = 0.0;
    for (int j = 0; j <= kMaxOrder; ++j) {
      std::vector<double> knots;
      for (int i = 0; i <= j + 1; ++i) knots.push_back(i);
      const double v = oracle::piecewise_quadrature<double>(
          [j](double x) { return cardinal_bspline(j, x); }, knots, 2);
      norm = std::max(norm, std::abs(v - 1.0));
    }
    c.check(norm <= 1e-10, fmt("unit integral, worst %.2e", norm));

    double rec = 0.0;
    for (int j = 1; j <= 3; ++j) {
      for (int i = 0; i <= 200; ++i) {
        const double x = (j + 1) * i / 200.0;
        rec = std::max(rec, std::abs(cardinal_bspline(j, x) - oracle::bspline_by_convolution(j, x)));
      }
    }
    c.check(rec <= 1e-8, fmt("recurrence vs convolution, worst %.2e", rec));

    double spec_q = 0.0;
    for (int j = 0; j <= 3; ++j) {
      std::vector<double> knots;
      for (int i = 0; i <= j + 1; ++i) knots.push_back(i);
      for (double w : {0.1, -0.1, 1.0, -1.0, 10.0, -10.0}) {
        const Complex ref = oracle::fourier_by_quadrature(
            [j](double x) { return oracle::bspline_truncated_power(j, x); }, w, knots, 16);
        spec_q = std::max(spec_q, std::abs(bspline_fourier(j, w) - ref));
      }
    }
    c.check(spec_q <= 1e-8, fmt("spectral quadrature consistency, worst %.2e", spec_q));

    // wa-core: in-span exactness with an independently written transform.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double span_err = 0.0;
    for (int j = 0; j <= 2; ++j) {
      for (int m = 1; m <= 5; ++m) {
        const SplineSpec spec{j, m, {-1.0, 1.5}};
        std::vector<double> cs(spec.coefficient_count());
        for (auto& v : cs) v = coef(rng);
        const double unit = spec.interval.length() / (std::ldexp(1.0, m) * (j + 1));
        const SpectralFunction ft{[&](Complex w) {
          const Complex i{0.0, 1.0};
          const Complex t = w * unit;
          Complex sum{0.0, 0.0};
          for (std::size_t k = 0; k < cs.size(); ++k)
            sum += cs[k] * std::exp(-i * w * (spec.interval.a + static_cast<double>(k) * unit));
          return std::pow((1.0 - std::exp(-i * t)) / (i * t), j + 1) * unit *
                 std::sqrt(std::ldexp(1.0, m)) * sum;
        }};
        const WaveletExpansion ex = recover_coefficients(ft, spec, default_quadrature(spec));
        for (std::size_t k = 0; k < cs.size(); ++k)
          span_err = std::max(span_err, std::abs(ex.coeffs[k] - cs[k]));
      }
    }
    c.check(span_err <= 1e-6, fmt("in-span exactness j<=2, m<=5, worst %.2e", span_err));

    for (const auto& name : catalog_names()) {
      const CatalogEntry e = catalog(name);
      double worst = 0.0;
      for (int j = 0; j <= 2; ++j) {
        for (int m = 1; m <= 6; ++m) {
          const SplineSpec spec{j, m, e.natural_interval};
          const WaveletExpansion full = recover_coefficients(e.transform, spec, default_quadrature(spec));
          const WaveletExpansion fast = recover_coefficients_fast(e.transform, spec, kDefaultRadius, 4);
          for (std::size_t k = 0; k < full.coeffs.size(); ++k)
            worst = std::max(worst, std::abs(full.coeffs[k] - fast.coeffs[k]));
        }
      }
      c.check(worst <= 1e-6, "fast/slow agreement " + name + fmt(", worst %.2e", worst));
    }

    const CatalogEntry f1 = catalog("f1");
    double q_err = 0.0;
    for (int m = 1; m <= 10; ++m) {
      const SplineSpec spec{0, m, f1.natural_interval};
      const double n = std::ldexp(1.0, m);
      const double h = n / 2;
      for (double r : {0.95, 0.9995}) {
        for (int i = 0; i <= 64; ++i) {
          const double u = kPi * i / 64.0;
          // Long double: the closed form cancels heavily near u = 0 when r is close to 1.
          const long double lr = r, lu = u;
          const double ref = static_cast<double>(
              (std::pow(lr, n + 1) * std::cos(n * lu - lu) - std::pow(lr, n) * std::cos(n * lu) -
               std::pow(lr, h + 1) * std::cos(h * lu - lu) + std::pow(lr, h) * std::cos(h * lu)) /
              (std::pow(2.0L, m / 2.0L) * (lr * lr - 2 * lr * std::cos(lu) + 1)));
          const Complex z = i == 64 ? Complex{-r, 0.0} : std::polar(r, u);
          const double got = eval_q(f1.transform, spec, z).real();
          q_err = std::max(q_err, std::abs(got - ref) / std::max(std::abs(ref), 1e-3));
        }
      }
    }
    c.check(q_err <= 1e-10, fmt("closed-form Re Q_{m,0} cross-check, worst rel %.2e", q_err));

    double bal = 0.0;
    for (int m = 1; m <= 10; ++m) {
      const SplineSpec spec{0, m, {0.0, 1.0}};
      const int panels = spec.default_panels();
      for (int k : {0, 1, panels / 2, panels - 1}) {
        const ErrorBudget b = error_budget(
            spec, QuadratureConfig{optimal_radius(m, k, panels), panels, kDefaultEta, 1}, k);
        bal = std::max(bal, std::abs(b.roundoff_estimate - b.discretization_bound) /
                                b.discretization_bound);
      }
    }
    c.check(bal <= 1e-9, fmt("radius formula balances the budget, worst rel %.2e", bal));

    // cos-method
    double cos_err = 0.0;
    const Interval iv{-1.0, 2.0};
    for (int p = 1; p < 24; ++p) {
      const double q = p * kPi / iv.length();
      auto seg = [&](double v) -> Complex {
        if (std::abs(v) < 1e-12) return {iv.length(), 0.0};
        const Complex i{0.0, 1.0};
        return (std::exp(i * v * iv.b) - std::exp(i * v * iv.a)) / (i * v);
      };
      const SpectralFunction xi{[&](Complex w) {
                                  const Complex i{0.0, 1.0};
                                  return 0.5 * (std::exp(-i * q * iv.a) * seg(w.real() + q) +
                                                std::exp(i * q * iv.a) * seg(w.real() - q));
                                },
                                Convention::CharPlus};
      const CosExpansion ce = cos_coefficients(xi, iv, 24);
      for (int i = 0; i <= 200; ++i) {
        const double x = iv.a + iv.length() * i / 200.0;
        cos_err = std::max(cos_err, std::abs(eval_cos_series(ce, x) -
                                             std::cos(p * kPi * (x - iv.a) / iv.length())));
      }
    }
    c.check(cos_err <= 1e-10, fmt("exact cosine reproduction, worst %.2e", cos_err));

    double gibbs = 1.0;
    for (int n = 64; n <= 2048; n *= 2) {
      const CosExpansion ce = cos_coefficients(f1.transform, f1.natural_interval, n);
      double w = 0.0;
      for (int i = -200; i <= 200; ++i) {
        const double x = 0.5 + i * 1e-4;
        w = std::max(w, std::abs(eval_cos_series(ce, x) - f1.reference(x)));
      }
      gibbs = std::min(gibbs, w);
    }
    c.check(gibbs >= 1e-2, fmt("Gibbs signature N = 64..2048, smallest jump error %.3e", gibbs));

    // transforms
    for (const auto& name : catalog_names()) {
      const CatalogEntry e = catalog(name);
      std::vector<double> breaks;
      for (double x = e.natural_interval.a; x <= e.natural_interval.b + 1e-12; x += 0.25)
        breaks.push_back(x);
      double worst = 0.0;
      for (double w : {0.5, 3.0, 17.0}) {
        worst = std::max(worst, std::abs(e.transform(w) -
                                         oracle::fourier_by_quadrature(e.reference, w, breaks, 16)));
      }
      c.check(worst <= 1e-6, "transform/reference consistency " + name + fmt(", worst %.2e", worst));
    }
  });

  all &= run_criterion(9, "Laplace pipeline and Bromwich baseline", 10.0, [](Criterion& c) {
    const LaplaceEntry le = laplace_catalog("lexp");
    const SplineSpec spec{1, 6, {0.0, 8.0}};
    const LaplaceInversion inv = invert_laplace({le.ltransform, 0.0}, spec, default_quadrature(spec));
    double worst = 0.0;
    for (int i = 0; i <= 250; ++i) {
      const double x = 0.5 + 2.5 * i / 250.0;
      worst = std::max(worst, std::abs(inv(x) - std::exp(-x)));
    }
    c.check(worst <= 1e-2, fmt("WA1-6 on [0,8], max error on [0.5,3] = %.3e <= 1e-2", worst));
    const BromwichParams p = bromwich_defaults(3.0, le.growth);
    const double br = bromwich_trapezoid(le.ltransform, p.sigma, p.h, 1.0, p.n_terms);
    c.check(std::abs(br - std::exp(-1.0)) <= 1e-3,
            fmt("Bromwich (sigma %.2f, h %.4f) error at x = 1: %.3e <= 1e-3", p.sigma, p.h,
                std::abs(br - std::exp(-1.0))));
  });

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}

// Recovers the unit step on [1/2, 1) from its Fourier transform with two Haar
// coefficients and compares against a 2048-term cosine series.

#include <cstdio>

#include "bsinv/bsinv.hpp"

int main() {
  using namespace bsinv;
  const CatalogEntry step = catalog("f1");
  const SplineSpec spec{0, 1, step.natural_interval};

  const WaveletExpansion wa = recover_coefficients(step.transform, spec, default_quadrature(spec));
  const CosExpansion cos = cos_coefficients(step.transform, step.natural_interval, 2048);

  std::printf("Haar coefficients: c0 = %.3e, c1 = %.12f\n", wa.coeffs[0], wa.coeffs[1]);
  std::printf("%8s %10s %14s %14s\n", "x", "f(x)", "WA0-1", "COS-2048");
  for (double x : {0.25, 0.49, 0.4995, 0.5, 0.5005, 0.51, 0.75, 0.999}) {
    std::printf("%8.4f %10.4f %14.10f %14.10f\n", x, step.reference(x), eval_expansion(wa, x),
                eval_cos_series(cos, x));
  }

  const auto wa_rep = error_grid([&](double x) { return eval_expansion(wa, x); }, step.reference,
                                 step.natural_interval, kDefaultGridPoints, spec.label());
  const auto cos_rep = error_grid([&](double x) { return eval_cos_series(cos, x); },
                                  step.reference, step.natural_interval, kDefaultGridPoints,
                                  cos.label());
  std::printf("%s max log10 error %.3f\n", wa_rep.method_label.c_str(), wa_rep.max_log10_abs_error);
  std::printf("%s max log10 error %.3f\n", cos_rep.method_label.c_str(),
              cos_rep.max_log10_abs_error);
  return 0;
}

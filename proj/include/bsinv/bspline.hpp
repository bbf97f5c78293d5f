#ifndef BSINV_BSPLINE_HPP
#define BSINV_BSPLINE_HPP

// Cardinal B-splines N_j, their Fourier transforms, the dilated/translated
// scaling functions phi_{m,k} = 2^{m/2} N_j(2^m y - k), and finite expansions
// in those functions mapped onto an interval [a, b].

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bsinv/types.hpp"

namespace bsinv {

inline constexpr int kMaxOrder = 8;
inline constexpr int kMaxScale = 16;

/// Below this modulus bspline_fourier switches to a Taylor expansion.
inline constexpr double kSmallFrequency = 1e-4;

/// Identifies an approximation space: B-spline order j, scale m and the
/// interval [a, b] that is mapped onto the spline support [0, j + 1].
struct SplineSpec {
  int order = 0;
  int scale = 1;
  Interval interval{};

  /// Largest translation index, (j+1)(2^m - 1).
  [[nodiscard]] int max_index() const noexcept { return (order + 1) * ((1 << scale) - 1); }
  [[nodiscard]] std::size_t coefficient_count() const noexcept {
    return static_cast<std::size_t>(max_index()) + 1;
  }
  /// Default trapezoid panel count (j+1) 2^m.
  [[nodiscard]] int default_panels() const noexcept { return (order + 1) << scale; }
  /// Maps x in [a, b] to y in [0, j + 1].
  [[nodiscard]] double to_spline_coordinate(double x) const noexcept {
    return (order + 1) * (x - interval.a) / interval.length();
  }
  /// Method label used in reports, e.g. "WA1-5".
  [[nodiscard]] std::string label() const {
    return "WA" + std::to_string(order) + "-" + std::to_string(scale);
  }
};

inline void validate(const SplineSpec& spec) {
  if (spec.order < 0 || spec.order > kMaxOrder) {
    throw std::invalid_argument("B-spline order must lie in [0, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(spec.order));
  }
  // m = 0 is the undilated basis; it is admitted so phi_{0,k} = N_j(y - k) is expressible.
  if (spec.scale < 0 || spec.scale > kMaxScale) {
    throw std::invalid_argument("scale must lie in [0, " + std::to_string(kMaxScale) + "], got " +
                                std::to_string(spec.scale));
  }
  validate(spec.interval);
}

/// Coefficients c_{m,k}^j of a truncated expansion together with their space.
struct WaveletExpansion {
  SplineSpec spec{};
  std::vector<double> coeffs;
  /// Assumptions and warnings recorded while the coefficients were produced.
  std::vector<std::string> notes;
};

inline void validate(const WaveletExpansion& e) {
  validate(e.spec);
  if (e.coeffs.size() != e.spec.coefficient_count()) {
    throw std::invalid_argument("expansion has " + std::to_string(e.coeffs.size()) +
                                " coefficients, space " + e.spec.label() + " needs " +
                                std::to_string(e.spec.coefficient_count()));
  }
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (!std::isfinite(e.coeffs[k])) {
      throw NumericalError("expansion coefficient " + std::to_string(k) + " is not finite");
    }
  }
}

/// N_j(x) through the two-term recurrence, base case N_0 = indicator of [0, 1).
/// Breakpoints follow the half-open convention at every order, so the result
/// is exactly zero for x < 0 and x >= j + 1.
inline double cardinal_bspline(int order, double x) {
  if (order < 0 || !(x >= 0.0) || x >= order + 1) return 0.0;
  // Holds N_i(x - t) for t = 0..order while i climbs from 0 to order.
  std::array<double, kMaxOrder + 1> fixed{};
  std::vector<double> spill;
  double* v = fixed.data();
  if (order > kMaxOrder) {
    spill.resize(static_cast<std::size_t>(order) + 1);
    v = spill.data();
  }
  for (int t = 0; t <= order; ++t) {
    const double s = x - t;
    v[t] = (s >= 0.0 && s < 1.0) ? 1.0 : 0.0;
  }
  for (int i = 1; i <= order; ++i) {
    for (int t = 0; t + i <= order; ++t) {
      const double s = x - t;
      v[t] = (s / i) * v[t] + ((i + 1 - s) / i) * v[t + 1];
    }
  }
  return v[0];
}

/// (1 - e^{-iw}) / (iw) for complex w without cancellation; equals 1 at w = 0.
inline Complex unit_box_fourier(Complex w) noexcept {
  if (w == Complex{0.0, 0.0}) return {1.0, 0.0};
  const Complex iw{0.0, 1.0};
  if (std::abs(w) < kSmallFrequency) {
    // 1 - iw/2 - w^2/6 + i w^3/24
    return 1.0 - iw * w / 2.0 - w * w / 6.0 + iw * w * w * w / 24.0;
  }
  // 1 - e^{v} with v = -iw, written as -expm1(v) componentwise.
  const double a = w.imag();
  const double b = -w.real();
  const double sh = std::sin(0.5 * b);
  const Complex one_minus_exp{-(std::expm1(a) * std::cos(b) - 2.0 * sh * sh),
                              -std::exp(a) * std::sin(b)};
  return one_minus_exp / (iw * w);
}

/// Fourier transform of N_j, ((1 - e^{-iw}) / (iw))^{j+1}; accepts complex w.
inline Complex bspline_fourier(int order, Complex w) noexcept {
  const Complex base = unit_box_fourier(w);
  Complex out{1.0, 0.0};
  for (int i = 0; i <= order; ++i) out *= base;
  return out;
}

inline Complex bspline_fourier(int order, double w) noexcept {
  return bspline_fourier(order, Complex{w, 0.0});
}

/// phi_{m,k}(y) = 2^{m/2} N_j(2^m y - k).
inline double scaling_function(const SplineSpec& spec, int k, double y) {
  if (k < 0 || k > spec.max_index()) {
    throw DomainError("translation index " + std::to_string(k) + " outside [0, " +
                      std::to_string(spec.max_index()) + "]");
  }
  const double dil = std::ldexp(1.0, spec.scale);
  return std::sqrt(dil) * cardinal_bspline(spec.order, dil * y - k);
}

/// Fourier transform of phi_{m,k}: 2^{-m/2} N^_j(xi / 2^m) e^{-ik xi / 2^m}.
inline Complex scaling_fourier(int order, int scale, int k, Complex xi) noexcept {
  const double dil = std::ldexp(1.0, scale);
  const Complex s = xi / dil;
  return bspline_fourier(order, s) * std::exp(Complex{0.0, -static_cast<double>(k)} * s) /
         std::sqrt(dil);
}

/// f(x) = sum_k c_k phi_{m,k}((j+1)(x - a)/(b - a)). Only the j + 1 terms whose
/// support covers the argument are visited; the result is 0 outside [a, b).
inline double eval_expansion(const WaveletExpansion& e, double x) {
  const SplineSpec& s = e.spec;
  const double y = s.to_spline_coordinate(x);
  if (!(y >= 0.0) || y >= s.order + 1) return 0.0;
  const double dil = std::ldexp(1.0, s.scale);
  const double t = dil * y;
  const int hi = std::min(static_cast<int>(std::floor(t)), s.max_index());
  const int lo = std::max(0, static_cast<int>(std::floor(t)) - s.order);
  double sum = 0.0;
  for (int k = lo; k <= hi && k < static_cast<int>(e.coeffs.size()); ++k) {
    sum += e.coeffs[k] * cardinal_bspline(s.order, t - k);
  }
  return std::sqrt(dil) * sum;
}

/// Exact Fourier transform (e^{-iwx} convention) of the function an expansion
/// represents; w may be complex.
inline Complex expansion_fourier(const WaveletExpansion& e, Complex w) noexcept {
  const SplineSpec& s = e.spec;
  const double scale = s.interval.length() / (s.order + 1);
  const Complex xi = scale * w;
  const double dil = std::ldexp(1.0, s.scale);
  // Sum c_k e^{-ik xi/2^m} by Horner in the common phase factor.
  const Complex phase = std::exp(Complex{0.0, -1.0} * xi / dil);
  Complex poly{0.0, 0.0};
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) poly = poly * phase + *it;
  return scale * std::exp(Complex{0.0, -s.interval.a} * w) * bspline_fourier(s.order, xi / dil) *
         poly / std::sqrt(dil);
}

}  // namespace bsinv

#endif  // BSINV_BSPLINE_HPP

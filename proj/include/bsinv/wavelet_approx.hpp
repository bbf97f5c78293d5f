#ifndef BSINV_WAVELET_APPROX_HPP
#define BSINV_WAVELET_APPROX_HPP

// Wavelet approximation (WA) inversion: recovers the coefficients of a
// B-spline expansion on [a, b] from the Fourier transform of the function.
//
// With z = exp(-i (b-a) w / (2^m (j+1))) the transform of the expansion becomes
// a polynomial P(z) = sum_k c_k z^k. The transform-side function
//
//   Q(z) = 2^{m/2} (j+1) z^{-2^m (j+1) a/(b-a)} f^(2^m (j+1)/(b-a) i log z) (log z)^{j+1}
//          / ((b-a) (z-1)^{j+1})
//
// approximates P, so c_k is a Cauchy integral of Q / z^{k+1} over |z| = r,
// discretised with the trapezoidal rule on the upper half circle.

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "bsinv/bspline.hpp"
#include "bsinv/parallel.hpp"
#include "bsinv/spectral.hpp"
#include "bsinv/types.hpp"

namespace bsinv {

inline constexpr double kDefaultRadius = 0.9995;
inline constexpr double kDefaultEta = 16.0;
/// Radii with |r - 1| beyond this band were observed to amplify errors at
/// high scales. Exceeding it is reported in the expansion notes, never rejected.
inline constexpr double kStableBand = 0.05;

struct QuadratureConfig {
  double radius = kDefaultRadius;
  int panels = 2;           ///< M; the step is h = pi / M
  double eta = kDefaultEta; ///< decimal digits carried by the quadrature sum
  unsigned threads = 1;
};

/// r = 0.9995, M = (j+1) 2^m, eta = 16.
inline QuadratureConfig default_quadrature(const SplineSpec& spec) {
  return QuadratureConfig{kDefaultRadius, spec.default_panels(), kDefaultEta, 1};
}

inline void validate(const QuadratureConfig& q) {
  if (!(q.radius > 0.0) || !std::isfinite(q.radius) || q.radius == 1.0) {
    throw std::invalid_argument("radius must be positive, finite and different from 1");
  }
  if (q.panels < 2) throw std::invalid_argument("panel count M must be at least 2");
  if (!(q.eta > 0.0)) throw std::invalid_argument("eta must be positive");
}

/// Leading-order error terms of one coefficient.
struct ErrorBudget {
  double discretization_bound = 0.0;
  double roundoff_estimate = 0.0;
  double prefactor = 0.0;  ///< 1 / (M r^k)
  bool heuristic = false;  ///< the bound is derived for j = 0 only
};

/// Evaluates Q_{m,j}(z) for a transform. Throws DomainError at z = 0 and at
/// the pole z = 1, NumericalError if the result is not finite. Powers and
/// logarithms use the principal branch.
inline Complex eval_q(const SpectralFunction& fhat, const SplineSpec& spec, Complex z) {
  if (z == Complex{0.0, 0.0}) throw DomainError("Q is undefined at z = 0");
  if (z == Complex{1.0, 0.0}) throw DomainError("Q has a pole at z = 1");
  const double span = spec.interval.length();
  const double dil = std::ldexp(1.0, spec.scale);
  const int order1 = spec.order + 1;
  const double c = dil * order1 / span;
  const Complex lz = std::log(z);
  const Complex w = c * Complex{0.0, 1.0} * lz;
  const Complex ratio = lz / (z - 1.0);
  Complex ratio_pow{1.0, 0.0};
  for (int i = 0; i < order1; ++i) ratio_pow *= ratio;
  const Complex shift = std::exp(-c * spec.interval.a * lz);
  const Complex q = std::sqrt(dil) * order1 / span * shift * fhat.forward(w) * ratio_pow;
  if (!is_finite(q)) {
    std::ostringstream os;
    os << "Q evaluated to a non-finite value at z = (" << z.real() << ", " << z.imag() << ")";
    throw NumericalError(os.str());
  }
  return q;
}

namespace detail {

inline std::string describe_node(int s, double u) {
  std::ostringstream os;
  os << "(s = " << s << ", u = " << u << ")";
  return os.str();
}

/// Re Q at u = s pi / M on the upper half circle; s = 0 and s = M hit the real axis exactly.
inline double re_q_at_node(const SpectralFunction& fhat, const SplineSpec& spec, double r, int s,
                           int panels) {
  Complex z;
  if (s == 0) {
    z = {r, 0.0};
  } else if (s == panels) {
    z = {-r, 0.0};  // +0 imaginary part keeps arg = +pi
  } else {
    z = std::polar(r, kPi * s / panels);
  }
  try {
    return eval_q(fhat, spec, z).real();
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " at quadrature node " +
                         describe_node(s, kPi * s / panels));
  }
}

inline void check_conjugate_symmetry(const SpectralFunction& fhat, const SplineSpec& spec,
                                     double r) {
  const double upper = eval_q(fhat, spec, std::polar(r, kPi / 3.0)).real();
  const double lower = eval_q(fhat, spec, std::polar(r, -kPi / 3.0)).real();
  const double scale = std::max({1.0, std::abs(upper), std::abs(lower)});
  if (std::abs(upper - lower) > 1e-8 * scale) {
    std::ostringstream os;
    os << "Re Q is not symmetric about u = pi (" << upper << " vs " << lower
       << "); the transform does not belong to a real-valued function";
    throw DomainError(os.str());
  }
}

inline void annotate(WaveletExpansion& out, const SpectralFunction& fhat, double r) {
  if (fhat.convention == Convention::CharPlus) {
    out.notes.emplace_back("transform supplied as a characteristic function; used f^(w) = xi(-w)");
  }
  if (std::abs(r - 1.0) > kStableBand) {
    std::ostringstream os;
    os << "radius " << r << " lies outside the empirical stability band |r - 1| <= "
       << kStableBand;
    out.notes.push_back(os.str());
  }
}

inline double finish_coefficient(double sum, double denom, int k, double r) {
  const double c = sum / denom;
  if (!std::isfinite(c)) {
    std::ostringstream os;
    os << "coefficient " << k << " is not finite (radius " << r
       << " too small for this index: roundoff blow-up)";
    throw NumericalError(os.str());
  }
  return c;
}

}  // namespace detail

/// Coefficients from the M-panel trapezoidal rule on |z| = r:
///   c_k = (Q(r) + (-1)^k Q(-r) + 2 sum_{s=1}^{M-1} Re Q(r e^{i s h}) cos(k s h)) / (M r^k),
/// and c_0 = (1/M) times the half-circle trapezoid of Re Q. The node values are
/// shared by all k; both the node evaluations and the per-k sums are split over
/// q.threads workers.
inline WaveletExpansion recover_coefficients(const SpectralFunction& fhat, const SplineSpec& spec,
                                             const QuadratureConfig& q) {
  validate(spec);
  validate(q);
  const int panels = q.panels;
  const double r = q.radius;

  std::vector<double> re_q(static_cast<std::size_t>(panels) + 1);
  detail::parallel_for(re_q.size(), q.threads, [&](std::size_t s) {
    re_q[s] = detail::re_q_at_node(fhat, spec, r, static_cast<int>(s), panels);
  });
  detail::check_conjugate_symmetry(fhat, spec, r);

  // cos(n pi / M) for n in [0, 2M); k*s is reduced mod 2M to keep arguments small.
  const std::size_t period = 2 * static_cast<std::size_t>(panels);
  std::vector<double> cos_table(period);
  for (std::size_t n = 0; n < period; ++n) cos_table[n] = std::cos(kPi * n / panels);

  WaveletExpansion out{spec, std::vector<double>(spec.coefficient_count()), {}};
  detail::parallel_for(out.coeffs.size(), q.threads, [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    if (k == 0) {
      double sum = 0.5 * (re_q.front() + re_q.back());
      for (int s = 1; s < panels; ++s) sum += re_q[s];
      out.coeffs[0] = detail::finish_coefficient(sum, panels, 0, r);
      return;
    }
    double inner = 0.0;
    for (int s = 1; s < panels; ++s) inner += re_q[s] * cos_table[(kk * s) % period];
    const double sum = re_q.front() + ((k % 2 == 0) ? re_q.back() : -re_q.back()) + 2.0 * inner;
    out.coeffs[kk] = detail::finish_coefficient(sum, panels * std::pow(r, k), k, r);
  });
  detail::annotate(out, fhat, r);
  return out;
}

/// Per-coefficient variant with M = 2k panels. With h = pi/(2k) the weights
/// cos(k s h) vanish for odd s and alternate in sign for even s, leaving
///   c_k = (Q(r) + (-1)^k Q(-r) + 2 sum_{t=1}^{k-1} (-1)^t Re Q(r e^{i t pi / k})) / (2k r^k).
/// c_0 uses the M = (j+1) 2^m rule. Note that the 2k-panel rule aliases
/// c_{3k}, c_{5k}, ... into c_k, so it only matches the full rule when those
/// higher coefficients are negligible.
inline WaveletExpansion recover_coefficients_fast(const SpectralFunction& fhat,
                                                  const SplineSpec& spec, double radius,
                                                  unsigned threads = 1) {
  validate(spec);
  QuadratureConfig q{radius, spec.default_panels(), kDefaultEta, threads};
  validate(q);
  const double r = radius;
  const double q_pos = detail::re_q_at_node(fhat, spec, r, 0, 1);
  const double q_neg = detail::re_q_at_node(fhat, spec, r, 1, 1);
  detail::check_conjugate_symmetry(fhat, spec, r);

  WaveletExpansion out{spec, std::vector<double>(spec.coefficient_count()), {}};
  detail::parallel_for(out.coeffs.size(), threads, [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    if (k == 0) {
      const int panels = q.panels;
      double sum = 0.5 * (q_pos + q_neg);
      for (int s = 1; s < panels; ++s) sum += detail::re_q_at_node(fhat, spec, r, s, panels);
      out.coeffs[0] = detail::finish_coefficient(sum, panels, 0, r);
      return;
    }
    double inner = 0.0;
    for (int t = 1; t < k; ++t) {
      const double v = detail::re_q_at_node(fhat, spec, r, t, k);
      inner += (t % 2 == 0) ? v : -v;
    }
    const double sum = q_pos + ((k % 2 == 0) ? q_neg : -q_neg) + 2.0 * inner;
    out.coeffs[kk] = detail::finish_coefficient(sum, 2.0 * k * std::pow(r, k), k, r);
  });
  detail::annotate(out, fhat, r);
  return out;
}

/// Radius balancing the j = 0 discretization bound against the roundoff
/// estimate for coefficient k:
///   r = (12 M 10^{-eta} / (pi^3 (k+1)^2))^{1 / (2^{m-1} + k)}.
inline double optimal_radius(int scale, int k, int panels, double eta = kDefaultEta) {
  const double num = 12.0 * panels * std::pow(10.0, -eta);
  const double den = kPi * kPi * kPi * (k + 1.0) * (k + 1.0);
  return std::pow(num / den, 1.0 / (std::ldexp(1.0, scale - 1) + k));
}

struct RadiusEstimate {
  double value = kDefaultRadius;
  bool heuristic = false;  ///< set when applied to j > 0
};

inline RadiusEstimate optimal_radius(const SplineSpec& spec, int k, int panels,
                                     double eta = kDefaultEta) {
  return {optimal_radius(spec.scale, k, panels, eta), spec.order > 0};
}

inline ErrorBudget error_budget(const SplineSpec& spec, const QuadratureConfig& q, int k) {
  const double m_panels = q.panels;
  ErrorBudget e;
  e.prefactor = 1.0 / (m_panels * std::pow(q.radius, k));
  e.roundoff_estimate = std::pow(10.0, -q.eta) * e.prefactor;
  e.discretization_bound = kPi * kPi * kPi / (12.0 * m_panels * m_panels) * (k + 1.0) * (k + 1.0) *
                           std::pow(q.radius, std::ldexp(1.0, spec.scale - 1));
  e.heuristic = spec.order > 0;
  return e;
}

}  // namespace bsinv

#endif  // BSINV_WAVELET_APPROX_HPP

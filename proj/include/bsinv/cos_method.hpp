#ifndef BSINV_COS_METHOD_HPP
#define BSINV_COS_METHOD_HPP

// Fourier-cosine (COS) reconstruction from a characteristic function, used as
// the comparison baseline for the wavelet inversion.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bsinv/spectral.hpp"
#include "bsinv/types.hpp"

namespace bsinv {

/// F_k, k = 0..N-1, on [a, b]. F_0 is stored at full weight and halved when
/// the series is evaluated.
struct CosExpansion {
  Interval interval{};
  std::vector<double> coeffs;

  [[nodiscard]] std::size_t terms() const noexcept { return coeffs.size(); }
  [[nodiscard]] std::string label() const { return "COS-" + std::to_string(coeffs.size()); }
};

/// F_k = 2/(b-a) Re(xi(k pi/(b-a)) e^{-i k a pi/(b-a)}). A ForwardMinus input
/// is read through xi(w) = f^(-w).
inline CosExpansion cos_coefficients(const SpectralFunction& xi, Interval iv, std::size_t n_terms) {
  validate(iv);
  if (n_terms < 1) throw std::invalid_argument("COS expansion needs at least one term");
  CosExpansion out{iv, std::vector<double>(n_terms)};
  const double span = iv.length();
  for (std::size_t k = 0; k < n_terms; ++k) {
    const double u = k * kPi / span;
    const Complex v = xi.characteristic(Complex{u, 0.0}) * std::polar(1.0, -u * iv.a);
    const double fk = 2.0 / span * v.real();
    if (!std::isfinite(fk)) {
      throw NumericalError("COS coefficient " + std::to_string(k) + " is not finite");
    }
    out.coeffs[k] = fk;
  }
  return out;
}

/// F_0/2 + sum_{k=1}^{N-1} F_k cos(k pi (x-a)/(b-a)).
inline double eval_cos_series(const CosExpansion& e, double x) noexcept {
  if (e.coeffs.empty()) return 0.0;
  const double theta = kPi * (x - e.interval.a) / e.interval.length();
  double sum = 0.5 * e.coeffs[0];
  for (std::size_t k = 1; k < e.coeffs.size(); ++k) sum += e.coeffs[k] * std::cos(k * theta);
  return sum;
}

}  // namespace bsinv

#endif  // BSINV_COS_METHOD_HPP

#ifndef BSINV_TYPES_HPP
#define BSINV_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bsinv {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Closed interval [a, b] with a < b.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  [[nodiscard]] double length() const noexcept { return b - a; }
  [[nodiscard]] bool contains(double x) const noexcept { return x >= a && x <= b; }
};

inline void validate(const Interval& iv) {
  if (!(iv.a < iv.b)) {
    throw std::invalid_argument("interval requires a < b, got [" + std::to_string(iv.a) + ", " +
                                std::to_string(iv.b) + "]");
  }
}

/// Raised for arguments outside an operation's domain (pole of Q, bad index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a computation produces NaN/Inf (typically roundoff blow-up for small radii).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace bsinv

#endif  // BSINV_TYPES_HPP

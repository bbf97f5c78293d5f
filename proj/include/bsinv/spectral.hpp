#ifndef BSINV_SPECTRAL_HPP
#define BSINV_SPECTRAL_HPP

#include <functional>
#include <utility>

#include "bsinv/types.hpp"

namespace bsinv {

/// Sign convention of a transform.
enum class Convention {
  ForwardMinus,  ///< f^(w) = int e^{-iwx} f(x) dx
  CharPlus,      ///< xi(w) = int e^{+iwx} f(x) dx (characteristic function)
};

/// A transform w -> C evaluatable at complex arguments. The wavelet
/// inversion probes it off the real axis, so closures must accept any w.
/// Evaluation must be safe to call concurrently when coefficient recovery
/// is run on several threads.
struct SpectralFunction {
  std::function<Complex(Complex)> eval;
  Convention convention = Convention::ForwardMinus;

  SpectralFunction() = default;
  SpectralFunction(std::function<Complex(Complex)> f, Convention c = Convention::ForwardMinus)
      : eval(std::move(f)), convention(c) {}

  Complex operator()(Complex w) const { return eval(w); }

  /// f^(w) regardless of the stored convention, using xi(w) = f^(-w).
  [[nodiscard]] Complex forward(Complex w) const {
    return convention == Convention::ForwardMinus ? eval(w) : eval(-w);
  }
  /// xi(w) regardless of the stored convention.
  [[nodiscard]] Complex characteristic(Complex w) const {
    return convention == Convention::CharPlus ? eval(w) : eval(-w);
  }
};

/// Re-wraps a transform into the requested convention.
inline SpectralFunction with_convention(const SpectralFunction& f, Convention target) {
  if (f.convention == target) return f;
  auto inner = f.eval;
  return SpectralFunction{[inner](Complex w) { return inner(-w); }, target};
}

}  // namespace bsinv

#endif  // BSINV_SPECTRAL_HPP

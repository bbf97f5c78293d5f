#ifndef BSINV_TRANSFORMS_HPP
#define BSINV_TRANSFORMS_HPP

// Test functions with closed-form transforms, the Laplace -> Fourier bridge
// and the trapezoidal Bromwich inversion used as a Laplace baseline.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bsinv/bspline.hpp"
#include "bsinv/spectral.hpp"
#include "bsinv/types.hpp"
#include "bsinv/wavelet_approx.hpp"

namespace bsinv {

using Params = std::map<std::string, double>;
using RealFunction = std::function<double(double)>;

struct CatalogEntry {
  std::string name;
  Params params;
  Interval natural_interval{};
  SpectralFunction transform;  ///< ForwardMinus
  RealFunction reference;
};

namespace detail {

inline double take_param(Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  const double v = it->second;
  p.erase(it);
  return v;
}

/// int_{lo}^{hi} e^{-iwx} dx for complex w.
inline Complex box_fourier(double lo, double hi, Complex w) {
  const double len = hi - lo;
  return std::exp(Complex{0.0, -lo} * w) * len * unit_box_fourier(len * w);
}

}  // namespace detail

inline constexpr double kDefaultAlpha = 50.0;
inline constexpr double kDefaultSigma = 0.1;

/// Names accepted by catalog().
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"f1", "f2", "f3", "f4", "f5"};
  return names;
}

/// f1 step on [1/2, 1), f2 = e^{-alpha|x|}, f3 = 2 phi^1_{1,0}, f4 = sum_{k<=6}
/// e^{-k} phi^1_{2,k}(x + 1), f5 Gaussian density with standard deviation sigma.
inline CatalogEntry catalog(const std::string& name, Params params = {}) {
  Params rest = params;
  CatalogEntry e;
  e.name = name;
  if (name == "f1") {
    e.natural_interval = {0.0, 1.0};
    e.transform = SpectralFunction{[](Complex w) { return detail::box_fourier(0.5, 1.0, w); }};
    e.reference = [](double x) { return (x >= 0.5 && x < 1.0) ? 1.0 : 0.0; };
  } else if (name == "f2") {
    const double alpha = detail::take_param(rest, "alpha", kDefaultAlpha);
    if (!(alpha > 0.0)) throw std::invalid_argument("f2 requires alpha > 0");
    params["alpha"] = alpha;
    e.natural_interval = {-1.0, 1.0};
    e.transform =
        SpectralFunction{[alpha](Complex w) { return 2.0 * alpha / (alpha * alpha + w * w); }};
    e.reference = [alpha](double x) { return std::exp(-alpha * std::abs(x)); };
  } else if (name == "f3") {
    e.natural_interval = {0.0, 2.0};
    e.transform = SpectralFunction{
        [](Complex w) { return 2.0 * scaling_fourier(1, 1, 0, w); }};
    const SplineSpec space{1, 1, {0.0, 2.0}};
    e.reference = [space](double x) { return 2.0 * scaling_function(space, 0, x); };
  } else if (name == "f4") {
    e.natural_interval = {-1.0, 1.0};
    e.transform = SpectralFunction{[](Complex w) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k <= 6; ++k) sum += std::exp(-k) * scaling_fourier(1, 2, k, w);
      return std::exp(Complex{0.0, 1.0} * w) * sum;  // shift by x + 1
    }};
    const SplineSpec space{1, 2, {-1.0, 1.0}};
    e.reference = [space](double x) {
      double sum = 0.0;
      for (int k = 0; k <= 6; ++k) sum += std::exp(-k) * scaling_function(space, k, x + 1.0);
      return sum;
    };
  } else if (name == "f5") {
    const double sigma = detail::take_param(rest, "sigma", kDefaultSigma);
    if (!(sigma > 0.0)) throw std::invalid_argument("f5 requires sigma > 0");
    params["sigma"] = sigma;
    e.natural_interval = {-1.0, 1.0};
    e.transform =
        SpectralFunction{[sigma](Complex w) { return std::exp(-0.5 * w * w * sigma * sigma); }};
    e.reference = [sigma](double x) {
      return std::exp(-0.5 * x * x / (sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
    };
  } else {
    throw std::invalid_argument("unknown catalog function '" + name + "'");
  }
  if (!rest.empty()) {
    throw std::invalid_argument("parameter '" + rest.begin()->first + "' does not apply to " +
                                name);
  }
  e.params = std::move(params);
  return e;
}

// ---------------------------------------------------------------------------
// Laplace transforms

using LaplaceTransform = std::function<Complex(Complex)>;

/// h(x) = f(x) e^{-beta x} has Fourier transform h^(w) = F(beta + i w) when
/// f vanishes for x < 0. The caller picks beta so that h is square integrable.
struct LaplaceBridge {
  LaplaceTransform ltransform;
  double beta = 0.0;
};

inline SpectralFunction laplace_to_fourier(const LaplaceBridge& bridge) {
  auto lt = bridge.ltransform;
  const double beta = bridge.beta;
  return SpectralFunction{[lt, beta](Complex w) { return lt(beta + Complex{0.0, 1.0} * w); }};
}

/// Wavelet inversion of a Laplace transform: recovers h = f e^{-beta x} on
/// [a, b] and undoes the damping on evaluation, f(x) = h(x) e^{beta x}.
struct LaplaceInversion {
  WaveletExpansion damped;
  double beta = 0.0;

  [[nodiscard]] double operator()(double x) const {
    return eval_expansion(damped, x) * std::exp(beta * x);
  }
};

inline LaplaceInversion invert_laplace(const LaplaceBridge& bridge, const SplineSpec& spec,
                                       const QuadratureConfig& q) {
  return {recover_coefficients(laplace_to_fourier(bridge), spec, q), bridge.beta};
}

/// f(x) ~ (h e^{sigma x}/pi) Re F(sigma) + (2 h e^{sigma x}/pi) sum_{k=1}^{n} Re F(sigma + i k h) cos(k h x).
/// sigma must exceed the exponential growth rate of f; x > 0.
inline double bromwich_trapezoid(const LaplaceTransform& lt, double sigma, double h, double x,
                                 std::size_t n_terms) {
  if (!(h > 0.0)) throw std::invalid_argument("Bromwich step h must be positive");
  if (!(x > 0.0)) throw std::invalid_argument("Bromwich inversion needs x > 0");
  double sum = 0.5 * lt(Complex{sigma, 0.0}).real();
  for (std::size_t k = 1; k <= n_terms; ++k) {
    const double u = k * h;
    sum += lt(Complex{sigma, u}).real() * std::cos(u * x);
    if (!std::isfinite(sum)) {
      std::ostringstream os;
      os << "Bromwich partial sum became non-finite at term " << k;
      throw NumericalError(os.str());
    }
  }
  return 2.0 * h * std::exp(sigma * x) / kPi * sum;
}

struct BromwichParams {
  double sigma = 1.0;
  double h = 0.1;
  std::size_t n_terms = 20000;
};

/// sigma = 1 + growth hint; h = pi / (8 x_max) so that h x <= pi/8 on the
/// requested range; 20000 terms.
inline BromwichParams bromwich_defaults(double x_max, double growth_hint = 0.0) {
  if (!(x_max > 0.0)) throw std::invalid_argument("x_max must be positive");
  return {1.0 + growth_hint, kPi / (8.0 * x_max), 20000};
}

/// Laplace test functions: "lexp" F(s) = 1/(s+1), f = e^{-x}; "lunit" F(s) = 1/s, f = 1.
struct LaplaceEntry {
  std::string name;
  LaplaceTransform ltransform;
  RealFunction reference;
  Interval natural_interval{};
  double growth = 0.0;
};

inline const std::vector<std::string>& laplace_catalog_names() {
  static const std::vector<std::string> names{"lexp", "lunit"};
  return names;
}

inline LaplaceEntry laplace_catalog(const std::string& name) {
  if (name == "lexp") {
    return {name, [](Complex s) { return 1.0 / (s + 1.0); }, [](double x) { return std::exp(-x); },
            {0.0, 8.0}, 0.0};
  }
  if (name == "lunit") {
    return {name, [](Complex s) { return 1.0 / s; }, [](double) { return 1.0; }, {0.0, 8.0}, 0.0};
  }
  throw std::invalid_argument("unknown Laplace catalog function '" + name + "'");
}

}  // namespace bsinv

#endif  // BSINV_TRANSFORMS_HPP

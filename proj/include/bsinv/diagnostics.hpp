#ifndef BSINV_DIAGNOSTICS_HPP
#define BSINV_DIAGNOSTICS_HPP

// Grid error measurement and CSV/JSON reports.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsinv/types.hpp"

namespace bsinv {

inline constexpr std::size_t kDefaultGridPoints = 4097;

struct GridPoint {
  double x = 0.0;
  double approx = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
};

/// Min/max log10 absolute error over a uniform grid. Points where the error is
/// exactly zero are left out of the logarithms and counted separately; if every
/// point is exact both statistics are -infinity.
struct ErrorReport {
  std::string method_label;
  Interval interval{};
  std::size_t grid_points = 0;
  double min_log10_abs_error = -std::numeric_limits<double>::infinity();
  double max_log10_abs_error = -std::numeric_limits<double>::infinity();
  std::size_t zero_error_points = 0;
  std::optional<std::vector<GridPoint>> per_point;

  [[nodiscard]] bool exact() const noexcept { return zero_error_points == grid_points; }
};

enum class ReportFormat { Csv, Json };

/// Uniform evaluation grid. A closed grid has n points including both
/// endpoints; an interior grid has the n interior nodes of a partition of
/// [a, b] into n + 1 equal panels.
struct GridSpec {
  std::size_t n_points = kDefaultGridPoints;
  bool include_endpoints = true;

  [[nodiscard]] double point(Interval iv, std::size_t i) const noexcept {
    if (include_endpoints) {
      if (i + 1 == n_points) return iv.b;
      return iv.a + iv.length() * static_cast<double>(i) / static_cast<double>(n_points - 1);
    }
    return iv.a + iv.length() * static_cast<double>(i + 1) / static_cast<double>(n_points + 1);
  }
};

/// Interior grid with spacing `step` (1e-3 by default, the spacing of the
/// published error tables).
inline GridSpec interior_grid(Interval iv, double step = 1e-3) {
  const auto panels = static_cast<std::size_t>(std::llround(iv.length() / step));
  return {panels > 1 ? panels - 1 : 1, false};
}

inline ErrorReport error_grid(const std::function<double(double)>& approx,
                              const std::function<double(double)>& reference, Interval iv,
                              GridSpec grid, std::string label = {}, bool keep_points = false) {
  const std::size_t n_points = grid.n_points;
  validate(iv);
  if (n_points < (grid.include_endpoints ? 2u : 1u)) {
    throw std::invalid_argument("error grid needs at least 2 points");
  }
  ErrorReport rep;
  rep.method_label = std::move(label);
  rep.interval = iv;
  rep.grid_points = n_points;
  if (keep_points) rep.per_point.emplace().reserve(n_points);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = grid.point(iv, i);
    const double fa = approx(x);
    const double fr = reference(x);
    if (!std::isfinite(fa) || !std::isfinite(fr)) {
      std::ostringstream os;
      os << "non-finite evaluation at x = " << x << " (approx " << fa << ", reference " << fr
         << ")";
      throw NumericalError(os.str());
    }
    const double err = std::abs(fa - fr);
    if (err == 0.0) {
      ++rep.zero_error_points;
    } else {
      const double l = std::log10(err);
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    if (rep.per_point) rep.per_point->push_back({x, fa, fr, err});
  }
  if (!rep.exact()) {
    rep.min_log10_abs_error = lo;
    rep.max_log10_abs_error = hi;
  }
  return rep;
}

/// Closed uniform grid of n_points.
inline ErrorReport error_grid(const std::function<double(double)>& approx,
                              const std::function<double(double)>& reference, Interval iv,
                              std::size_t n_points = kDefaultGridPoints, std::string label = {},
                              bool keep_points = false) {
  return error_grid(approx, reference, iv, GridSpec{n_points, true}, std::move(label),
                    keep_points);
}

namespace detail {

inline std::string format_double(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline nlohmann::json to_json(const ErrorReport& rep) {
  auto finite_or_null = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json j{
      {"method_label", rep.method_label},
      {"interval", {rep.interval.a, rep.interval.b}},
      {"grid_points", rep.grid_points},
      {"min_log10_abs_error", finite_or_null(rep.min_log10_abs_error)},
      {"max_log10_abs_error", finite_or_null(rep.max_log10_abs_error)},
      {"zero_error_points", rep.zero_error_points},
  };
  if (rep.per_point) {
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& p : *rep.per_point) {
      pts.push_back({{"x", p.x}, {"approx", p.approx}, {"reference", p.reference},
                     {"abs_error", p.abs_error}});
    }
  }
  return j;
}

/// Inverse of to_json for the summary fields (points are read back if present).
inline ErrorReport report_from_json(const nlohmann::json& j) {
  auto read_log = [](const nlohmann::json& v) {
    return v.is_null() ? -std::numeric_limits<double>::infinity() : v.get<double>();
  };
  ErrorReport rep;
  rep.method_label = j.at("method_label").get<std::string>();
  rep.interval = {j.at("interval").at(0).get<double>(), j.at("interval").at(1).get<double>()};
  rep.grid_points = j.at("grid_points").get<std::size_t>();
  rep.min_log10_abs_error = read_log(j.at("min_log10_abs_error"));
  rep.max_log10_abs_error = read_log(j.at("max_log10_abs_error"));
  rep.zero_error_points = j.value("zero_error_points", std::size_t{0});
  if (j.contains("points")) {
    auto& pts = rep.per_point.emplace();
    for (const auto& p : j.at("points")) {
      pts.push_back({p.at("x").get<double>(), p.at("approx").get<double>(),
                     p.at("reference").get<double>(), p.at("abs_error").get<double>()});
    }
  }
  return rep;
}

/// CSV: header `x,approx,reference,abs_error` and one row per retained grid
/// point, then `# min_log10=` / `# max_log10=` comment lines.
/// JSON: one object, see to_json. Stream failures raise std::ios_base::failure.
inline void emit_report(const ErrorReport& rep, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json) {
    out << to_json(rep).dump(2) << '\n';
  } else {
    if (rep.per_point) {
      out << "x,approx,reference,abs_error\n";
      for (const auto& p : *rep.per_point) {
        out << detail::format_double(p.x) << ',' << detail::format_double(p.approx) << ','
            << detail::format_double(p.reference) << ',' << detail::format_double(p.abs_error)
            << '\n';
      }
    }
    out << "# min_log10=" << detail::format_double(rep.min_log10_abs_error) << '\n';
    out << "# max_log10=" << detail::format_double(rep.max_log10_abs_error) << '\n';
  }
  out.flush();
  if (!out) throw std::ios_base::failure("failed to write error report");
}

}  // namespace bsinv

#endif  // BSINV_DIAGNOSTICS_HPP

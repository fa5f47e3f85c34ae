#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecontract/error.hpp"
#include "liecontract/lie_algebra.hpp"

namespace liecontract {

enum class Verdict { converged, diverged, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Error series along a decreasing ε schedule.
struct ConvergenceReport {
  std::vector<double> eps_values;  // strictly decreasing
  std::vector<double> errors;      // one per ε
  double fitted_rate = 0.0;        // slope of log(error) against log(ε)
  Verdict verdict = Verdict::inconclusive;
  std::optional<StructureConstants> limit_estimate;
  std::string diagnostic;
  // Optional per-component breakdown of `errors` (e.g. one column per basis pair).
  std::vector<std::string> component_labels;
  std::vector<std::vector<double>> component_errors;
};

/// Least-squares slope of log(error) against log(ε). Points with zero error
/// carry no slope information and are skipped; fewer than two usable points
/// give NaN.
inline double fit_log_rate(const std::vector<double>& eps, const std::vector<double>& errors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < eps.size() && i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) continue;
    const double x = std::log(eps[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return std::nan("");
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nan("");
  return (m * sxy - sx * sy) / denom;
}

/// Checks that a schedule is strictly decreasing and inside (0, 1).
inline void validate_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw ValidationError("ε schedule is empty");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < 1.0)) throw ValidationError("ε values must lie in (0, 1)");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw ValidationError("ε schedule must be strictly decreasing");
  }
}

/// Geometric schedule from `from` down to `to` with `steps` points.
inline std::vector<double> geometric_schedule(double from, double to, int steps) {
  if (steps < 1) throw ValidationError("schedule needs at least one step");
  if (!(from > 0.0 && to > 0.0)) throw ValidationError("schedule endpoints must be positive");
  std::vector<double> eps;
  eps.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    eps.push_back(from);
    return eps;
  }
  const double lf = std::log10(from);
  const double lt = std::log10(to);
  for (int i = 0; i < steps; ++i) eps.push_back(std::pow(10.0, lf + (lt - lf) * i / (steps - 1)));
  return eps;
}

}  // namespace liecontract

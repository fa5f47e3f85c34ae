#pragma once

#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "liecontract/convergence.hpp"
#include "liecontract/representations.hpp"

namespace liecontract::su2h {

/// s_ε = ⌊λ/ε⌋. The quotient is nudged up by a few ulps so that, e.g.,
/// λ = 1, ε = 1e-3 gives 1000 rather than 999 from rounding in 1e-3.
inline long long deformed_spin(double lambda, double eps) {
  if (!(eps > 0.0)) throw ValidationError("deformed transition function needs eps > 0");
  const double q = lambda / eps;
  if (!std::isfinite(q) || q > 4.5e15) throw ValidationError("s_eps = floor(lambda/eps) is too large to represent");
  return static_cast<long long>(std::floor(q * (1.0 + 4.0 * DBL_EPSILON)));
}

/// Transition function of the line bundle on a chart overlap.
///   su2         c_s(z) = z^{2s}
///   heisenberg  c^λ(z) = e^{iλz}
///   deformed    c^ε_s(z) = (1 + iεz)^{2 s_ε},  s_ε = ⌊λ/ε⌋ >= 1
class TransitionFn {
public:
  enum class Kind { su2, heisenberg, deformed };

  static TransitionFn su2(Spin s) { return TransitionFn(Kind::su2, s.twice(), 0.0, 0.0); }
  static TransitionFn heisenberg(double lambda) { return TransitionFn(Kind::heisenberg, 0, lambda, 0.0); }
  static TransitionFn deformed(double lambda, double eps) {
    const long long s_eps = deformed_spin(lambda, eps);
    if (s_eps < 1) {
      throw ValidationError("deformed transition function needs s_eps = floor(lambda/eps) >= 1, got " +
                            std::to_string(s_eps));
    }
    return TransitionFn(Kind::deformed, 2 * s_eps, lambda, eps);
  }

  Kind kind() const { return kind_; }
  /// Exponent 2s (su2) or 2s_ε (deformed).
  long long power() const { return power_; }
  double lambda() const { return lambda_; }
  double eps() const { return eps_; }

  cd operator()(cd z) const {
    switch (kind_) {
      case Kind::su2: return detail::ipow(z, power_);
      case Kind::heisenberg: return std::exp(cd(0.0, lambda_) * z);
      case Kind::deformed: return detail::ipow(cd(1.0, 0.0) + cd(0.0, eps_) * z, power_);
    }
    return {};
  }

private:
  TransitionFn(Kind k, long long power, double lambda, double eps)
      : kind_(k), power_(power), lambda_(lambda), eps_(eps) {}

  Kind kind_;
  long long power_;
  double lambda_;
  double eps_;
};

inline cd transition_eval(const TransitionFn& fn, cd z) { return fn(z); }

/// Global holomorphic section of the degree-2s bundle over the sphere, given
/// on chart 1 by a polynomial of degree <= 2s.
class PolySection {
public:
  PolySection(Spin s, Eigen::VectorXcd coeffs) : s_(s), a_(std::move(coeffs)) {
    if (a_.size() != s.dim()) throw DimensionError("section needs exactly 2s+1 coefficients");
  }

  Spin spin() const { return s_; }
  const Eigen::VectorXcd& coeffs() const { return a_; }

  /// s_1(z) on chart 1.
  cd chart1(cd z) const {
    cd acc(0.0, 0.0);
    for (Eigen::Index k = a_.size() - 1; k >= 0; --k) acc = acc * z + a_[k];
    return acc;
  }
  /// Coefficients on chart 2: ã_n = a_{2s-n}.
  Eigen::VectorXcd chart2_coeffs() const { return a_.reverse(); }
  /// s_2(w) on chart 2, related by s_1(z) = c_s(z) s_2(1/z).
  cd chart2(cd w) const {
    const Eigen::VectorXcd b = chart2_coeffs();
    cd acc(0.0, 0.0);
    for (Eigen::Index k = b.size() - 1; k >= 0; --k) acc = acc * w + b[k];
    return acc;
  }

private:
  Spin s_;
  Eigen::VectorXcd a_;
};

/// Truncated holomorphic section of the Heisenberg bundle.
class FockVector {
public:
  FockVector(double lambda, Eigen::VectorXcd coeffs) : lambda_(lambda), c_(std::move(coeffs)) {
    if (!(lambda > 0.0)) throw ValidationError("Fock vector needs lambda > 0");
    if (c_.size() < 2) throw ValidationError("Fock vector needs cutoff >= 1");
  }

  double lambda() const { return lambda_; }
  int cutoff() const { return static_cast<int>(c_.size()) - 1; }
  const Eigen::VectorXcd& coeffs() const { return c_; }

  /// Norm under ⟨w^j, w^k⟩ = δ_jk j!/λ^j.
  double norm() const {
    double sq = 0.0;
    for (Eigen::Index k = 0; k < c_.size(); ++k)
      sq += std::norm(c_[k]) * std::exp(2.0 * detail::log_fock_norm(lambda_, static_cast<int>(k)));
    return std::sqrt(sq);
  }

private:
  double lambda_;
  Eigen::VectorXcd c_;
};

struct TransitionStudy {
  std::vector<double> eps_values;
  std::vector<long long> s_eps;
  ConvergenceReport vs_c1;  // sup |c^ε_s - e^{iλz}|
  ConvergenceReport vs_c2;  // sup |c^ε_s - e^{2iλz}|
  std::optional<int> winning_c;
  std::string diagnostic;
};

struct TransitionOptions {
  double radius = 1.0;
  int radial_points = 64;
  int angular_points = 128;
  double converged_below = 0.01;
};

/// sup over a polar grid of the closed disk |z| <= R of |c^ε_s(z) - e^{icλz}|
/// for c ∈ {1, 2}. A candidate converges when its error sequence is
/// non-increasing along the schedule and ends below `converged_below`.
inline TransitionStudy transition_convergence(double lambda, const std::vector<double>& schedule,
                                              const TransitionOptions& opts = {}) {
  validate_schedule(schedule);
  if (!(lambda > 0.0)) throw ValidationError("transition convergence needs lambda > 0 (s_eps >= 1)");
  if (!(opts.radius > 0.0)) throw ValidationError("disk radius must be positive");
  if (opts.radial_points < 1 || opts.angular_points < 1) throw ValidationError("grid must be non-empty");

  std::vector<cd> grid;
  grid.reserve(static_cast<std::size_t>((opts.radial_points + 1) * opts.angular_points));
  for (int i = 0; i <= opts.radial_points; ++i) {
    const double r = opts.radius * i / opts.radial_points;
    for (int j = 0; j < opts.angular_points; ++j)
      grid.push_back(std::polar(r, 2.0 * std::numbers::pi * j / opts.angular_points));
  }

  TransitionStudy out;
  for (double eps : schedule) {
    long long s_eps = 0;
    try {
      s_eps = deformed_spin(lambda, eps);
    } catch (const ValidationError& e) {
      out.diagnostic += "dropped eps=" + std::to_string(eps) + ": " + e.what() + "; ";
      continue;
    }
    if (s_eps < 1) throw ValidationError("s_eps = floor(lambda/eps) must be at least 1 at eps=" + std::to_string(eps));
    const TransitionFn fn = TransitionFn::deformed(lambda, eps);
    double e1 = 0.0, e2 = 0.0;
    for (const cd z : grid) {
      const cd v = fn(z);
      e1 = std::max(e1, std::abs(v - std::exp(cd(0.0, lambda) * z)));
      e2 = std::max(e2, std::abs(v - std::exp(cd(0.0, 2.0 * lambda) * z)));
    }
    out.eps_values.push_back(eps);
    out.s_eps.push_back(s_eps);
    out.vs_c1.errors.push_back(e1);
    out.vs_c2.errors.push_back(e2);
  }

  int winners = 0;
  int last = 0;
  for (auto [rep, c] : {std::pair{&out.vs_c1, 1}, std::pair{&out.vs_c2, 2}}) {
    rep->eps_values = out.eps_values;
    rep->fitted_rate = fit_log_rate(rep->eps_values, rep->errors);
    bool monotone = true;
    for (std::size_t k = 1; k < rep->errors.size(); ++k)
      if (rep->errors[k] > rep->errors[k - 1]) monotone = false;
    if (rep->errors.empty()) {
      rep->verdict = Verdict::inconclusive;
    } else if (monotone && rep->errors.back() < opts.converged_below) {
      rep->verdict = Verdict::converged;
      ++winners;
      last = c;
    } else if (!monotone && rep->errors.back() >= rep->errors.front()) {
      rep->verdict = Verdict::diverged;
    } else {
      rep->verdict = Verdict::inconclusive;
    }
  }
  if (winners == 1) out.winning_c = last;
  return out;
}

}  // namespace liecontract::su2h

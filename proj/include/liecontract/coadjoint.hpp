#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "liecontract/catalog.hpp"
#include "liecontract/contraction.hpp"
#include "liecontract/lie_algebra.hpp"

namespace liecontract {

/// Element of the dual space g*, in the dual basis.
class DualVector {
public:
  DualVector() = default;
  explicit DualVector(Eigen::VectorXd coeffs) : c_(std::move(coeffs)) {}

  static DualVector zero(std::size_t n) { return DualVector(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))); }
  static DualVector basis(std::size_t n, std::size_t k) {
    return DualVector(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)));
  }

  const Eigen::VectorXd& coeffs() const { return c_; }
  std::size_t size() const { return static_cast<std::size_t>(c_.size()); }
  double operator[](std::size_t k) const { return c_[static_cast<Eigen::Index>(k)]; }

  /// ⟨μ, x⟩
  double pair(const Vector& x) const {
    detail::require_dim(static_cast<std::size_t>(x.size()), size(), "dual pairing");
    return c_.dot(x);
  }

private:
  Eigen::VectorXd c_;
};

struct QuantConfig {
  double hbar = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("hbar must be positive");
  }
};

/// Matrix of μ ↦ ad*_ξ μ under ⟨ad*_ξ μ, η⟩ = -⟨μ, [ξ, η]⟩, i.e. -ad_ξᵀ.
inline Eigen::MatrixXd ad_star_matrix(const LieAlgebra& alg, const Vector& xi) {
  return -alg.ad(xi).transpose();
}

inline DualVector ad_star(const LieAlgebra& alg, const Vector& xi, const DualVector& mu) {
  detail::require_dim(mu.size(), alg.dim(), "ad_star");
  return DualVector(ad_star_matrix(alg, xi) * mu.coeffs());
}

namespace detail {

/// Columns ad*_{e_i} μ, so that (matrix * ξ) == ad*_ξ μ.
inline Eigen::MatrixXd orbit_tangent_map(const LieAlgebra& alg, const DualVector& mu) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.col(i) = ad_star_matrix(alg, Vector::Unit(n, i)) * mu.coeffs();
  return m;
}

}  // namespace detail

struct Stabilizer {
  std::vector<Vector> basis;
  std::size_t dim = 0;
  std::size_t orbit_dim = 0;  // dim g - dim g_μ
};

/// g_μ = {ξ : ad*_ξ μ = 0}, from the SVD of ξ ↦ ad*_ξ μ.
inline Stabilizer stabilizer_subalgebra(const LieAlgebra& alg, const DualVector& mu,
                                        double tol = Tolerances{}.singular_value) {
  detail::require_dim(mu.size(), alg.dim(), "stabilizer_subalgebra");
  const Eigen::MatrixXd m = detail::orbit_tangent_map(alg, mu);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Stabilizer out;
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const double s = i < sv.size() ? sv[i] : 0.0;
    if (s <= tol) out.basis.emplace_back(svd.matrixV().col(i));
  }
  out.dim = out.basis.size();
  out.orbit_dim = alg.dim() - out.dim;
  return out;
}

/// Kirillov form ω_μ(ξ, η) = ⟨μ, [ξ, η]⟩.
inline double symplectic_form(const LieAlgebra& alg, const DualVector& mu, const Vector& xi, const Vector& eta) {
  detail::require_dim(mu.size(), alg.dim(), "symplectic_form");
  return mu.pair(bracket(alg, xi, eta));
}

/// exp(t ad*_X) μ.
inline DualVector coadjoint_flow(const LieAlgebra& alg, const Vector& X, const DualVector& mu, double t) {
  detail::require_dim(mu.size(), alg.dim(), "coadjoint_flow");
  const Eigen::MatrixXd gen = t * ad_star_matrix(alg, X);
  return DualVector(gen.exp() * mu.coeffs());
}

/// Killing form K_ij = tr(ad_{e_i} ad_{e_j}).
inline Eigen::MatrixXd killing_form(const LieAlgebra& alg) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  std::vector<Eigen::MatrixXd> ads;
  for (Eigen::Index i = 0; i < n; ++i) ads.push_back(alg.ad(Vector::Unit(n, i)));
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
  return k;
}

/// Quadratic Casimir μᵀK⁻¹μ; empty when the Killing form is degenerate.
inline std::optional<double> quadratic_casimir(const LieAlgebra& alg, const DualVector& mu) {
  const Eigen::MatrixXd k = killing_form(alg);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
  if (!lu.isInvertible()) return std::nullopt;
  return mu.coeffs().dot(lu.solve(mu.coeffs()));
}

struct FlowSample {
  Vector X;
  double t = 0.0;
};

struct OrbitSample {
  DualVector base;
  std::vector<DualVector> points;        // U*_ε ∘ flow ∘ (U*_ε)⁻¹ applied to base
  std::vector<FlowSample> generators;    // sample that produced each point
  std::vector<DualVector> limit_points;  // flows of base under the contracted algebra
  std::optional<double> casimir_spread;  // max - min Casimir of the G₁-frame points
};

/// Deforms the G₁ coadjoint orbit: transport μ by (U*_ε)⁻¹, flow under G₁
/// along U_ε X for time t, translate back by U*_ε. The ε → 0 limit of each
/// point is the G₀ coadjoint flow of μ along X, recorded in limit_points.
inline OrbitSample orbit_deform(const LieAlgebra& alg0, const LieAlgebra& alg1, const ContractionSpec& spec,
                                const DualVector& mu, double eps, const std::vector<FlowSample>& sampling) {
  detail::require_dim(alg0.dim(), alg1.dim(), "orbit_deform algebras");
  detail::require_dim(spec.dim(), alg1.dim(), "orbit_deform spec");
  detail::require_dim(mu.size(), alg1.dim(), "orbit_deform mu");
  if (!(eps > 0.0)) throw ValidationError("orbit_deform: eps must be positive");
  const Vector U = build_U(spec, eps);

  Eigen::VectorXd lifted = mu.coeffs();
  for (Eigen::Index k = 0; k < lifted.size(); ++k) {
    lifted[k] /= U[k];
    if (!std::isfinite(lifted[k]) || std::abs(lifted[k]) > 1e300) {
      throw ValidationError("orbit_deform: (U*_eps)^-1 overflows at eps=" + std::to_string(eps));
    }
  }
  const DualVector mu_eps(lifted);

  OrbitSample out;
  out.base = mu;
  const auto casimir0 = quadratic_casimir(alg1, mu_eps);
  double cmin = casimir0.value_or(0.0), cmax = cmin;
  for (const auto& s : sampling) {
    detail::require_dim(static_cast<std::size_t>(s.X.size()), alg1.dim(), "orbit_deform generator");
    const DualVector p1 = coadjoint_flow(alg1, U.cwiseProduct(s.X), mu_eps, s.t);
    out.points.emplace_back(U.cwiseProduct(p1.coeffs()));
    out.generators.push_back(s);
    out.limit_points.push_back(coadjoint_flow(alg0, s.X, mu, s.t));
    if (casimir0) {
      const double c = *quadratic_casimir(alg1, p1);
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
    }
  }
  if (casimir0) out.casimir_spread = cmax - cmin;
  return out;
}

struct CharacterSeries {
  std::vector<double> eps_values;
  std::vector<std::complex<double>> values;
  std::complex<double> limit{1.0, 0.0};
  Verdict verdict = Verdict::inconclusive;
  std::string diagnostic;
};

/// exp(i⟨U*_ε μ, X⟩) along the schedule, with a Cauchy verdict on the tail.
inline CharacterSeries character_limit(const LieAlgebra& alg0, const ContractionSpec& spec, const DualVector& mu,
                                       const Vector& X, const std::vector<double>& schedule,
                                       double cauchy_tol = 1e-6) {
  validate_schedule(schedule);
  detail::require_dim(spec.dim(), alg0.dim(), "character_limit spec");
  detail::require_dim(mu.size(), alg0.dim(), "character_limit mu");
  detail::require_dim(static_cast<std::size_t>(X.size()), alg0.dim(), "character_limit X");
  CharacterSeries out;
  double first_exponent = 0.0;
  for (double eps : schedule) {
    const Vector U = build_U(spec, eps);
    const double exponent = mu.coeffs().dot(U.cwiseProduct(X));
    if (!std::isfinite(exponent) || std::abs(exponent) > 1e12) {
      out.verdict = Verdict::diverged;
      out.diagnostic = "character exponent diverges at eps=" + std::to_string(eps);
      return out;
    }
    if (out.values.empty()) first_exponent = exponent;
    out.eps_values.push_back(eps);
    out.values.push_back(std::polar(1.0, exponent));
  }
  out.limit = out.values.back();
  const double last_exponent = mu.coeffs().dot(build_U(spec, schedule.back()).cwiseProduct(X));
  if (out.values.size() >= 2 && std::abs(out.values.back() - out.values[out.values.size() - 2]) <= cauchy_tol) {
    out.verdict = Verdict::converged;
  } else if (out.values.size() == 1) {
    out.verdict = Verdict::inconclusive;
  } else if (std::abs(last_exponent) > 1e3 * std::max(1.0, std::abs(first_exponent))) {
    out.verdict = Verdict::diverged;
    out.diagnostic = "character exponent grows along the schedule";
  }
  return out;
}

struct IntegralityResult {
  double integral = 0.0;  // ∫ ω over the sphere
  double value = 0.0;     // integral / (2πħ)
  bool quantizable = false;
};

/// (1/2πħ) ∫ ω over the su2 coadjoint sphere |μ| = s. The Kirillov form is
/// evaluated pointwise as ⟨μ, [ξ_a, ξ_b]⟩ with ad*_{ξ_a} μ the coordinate
/// tangent vectors. Quadrature: midpoint in cos θ (which absorbs the sin θ
/// weight and avoids the poles), trapezoid in the periodic φ.
inline IntegralityResult sphere_integrality(double s, int n_theta, int n_phi, const QuantConfig& cfg = {},
                                            double integer_tol = 1e-6) {
  if (!(s > 0.0)) throw ValidationError("sphere radius must be positive");
  if (n_theta < 32 || n_phi < 64) throw ValidationError("quadrature grid must be at least 32x64");
  cfg.validate();
  const LieAlgebra alg = su2();
  const double du = 2.0 / n_theta;
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  double total = 0.0;
  for (int a = 0; a < n_theta; ++a) {
    const double u = -1.0 + (a + 0.5) * du;
    const double r = std::sqrt(1.0 - u * u);
    double row = 0.0;
    for (int b = 0; b < n_phi; ++b) {
      const double phi = b * dphi;
      const double c = std::cos(phi), sn = std::sin(phi);
      const DualVector mu(Eigen::Vector3d(s * r * c, s * r * sn, s * u));
      const Eigen::Vector3d d_phi(-s * r * sn, s * r * c, 0.0);
      const Eigen::Vector3d d_u(-s * u / r * c, -s * u / r * sn, s);
      const auto solver = detail::orbit_tangent_map(alg, mu).completeOrthogonalDecomposition();
      const Vector xi_phi = solver.solve(d_phi);
      const Vector xi_u = solver.solve(d_u);
      row += symplectic_form(alg, mu, xi_phi, xi_u);
    }
    total += row;
  }
  IntegralityResult out;
  out.integral = total * du * dphi;
  out.value = out.integral / (2.0 * std::numbers::pi * cfg.hbar);
  out.quantizable = std::abs(out.value - std::round(out.value)) <= integer_tol;
  return out;
}

/// ψ = exp((i/ħ) ∫₀¹ L dt) with Lagrangian L = ½⟨μ_t, X⟩ along the coadjoint
/// path μ_t = exp(t ad*_X) m, by composite midpoint quadrature. `mu` names
/// the orbit and must match the algebra dimension.
inline std::complex<double> cocycle_phase(const LieAlgebra& alg, const DualVector& mu, const DualVector& m,
                                          const Vector& X, const QuantConfig& cfg = {}, int steps = 64) {
  if (steps < 16) throw ValidationError("cocycle_phase needs at least 16 quadrature steps");
  cfg.validate();
  detail::require_dim(mu.size(), alg.dim(), "cocycle_phase mu");
  detail::require_dim(m.size(), alg.dim(), "cocycle_phase m");
  detail::require_dim(static_cast<std::size_t>(X.size()), alg.dim(), "cocycle_phase X");
  const double h = 1.0 / steps;
  const Eigen::MatrixXd step = (h * ad_star_matrix(alg, X)).exp();
  Eigen::VectorXd mu_t = (0.5 * h * ad_star_matrix(alg, X)).exp() * m.coeffs();
  double action = 0.0;
  for (int k = 0; k < steps; ++k) {
    action += 0.5 * mu_t.dot(X);
    mu_t = step * mu_t;
  }
  return std::polar(1.0, action * h / cfg.hbar);
}

}  // namespace liecontract

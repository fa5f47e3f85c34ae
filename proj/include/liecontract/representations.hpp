#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "liecontract/coadjoint.hpp"
#include "liecontract/su2.hpp"

namespace liecontract::su2h {

using MatC = Eigen::MatrixXcd;

namespace detail {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// z^p for integer p >= 0, with 0^0 = 1.
inline cd ipow(cd z, long long p) {
  cd r(1.0, 0.0);
  while (p > 0) {
    if (p & 1) r *= z;
    z *= z;
    p >>= 1;
  }
  return r;
}

/// Coefficient of z^j in (a z + c)^k (b z + d)^(n-k), where g = [[a, b], [c, d]].
inline cd spin_monomial_entry(int n, const Mat2& g, int j, int k) {
  const cd a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  cd sum(0.0, 0.0);
  for (int i = std::max(0, j - (n - k)); i <= std::min(j, k); ++i) {
    sum += binomial(k, i) * ipow(a, i) * ipow(c, k - i) * binomial(n - k, j - i) * ipow(b, j - i) *
           ipow(d, n - k - j + i);
  }
  return sum;
}

/// log ‖z^m‖ for the invariant inner product ⟨z^j, z^k⟩ = δ_jk j!(n-j)!/(n+1)!.
inline double log_spin_norm(int n, int m) {
  return 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n - m + 1.0) - std::lgamma(n + 2.0));
}

/// log ‖w^m‖ for the Bargmann inner product ⟨w^j, w^k⟩ = δ_jk j!/λ^j.
inline double log_fock_norm(double lambda, int m) {
  return 0.5 * (std::lgamma(m + 1.0) - m * std::log(lambda));
}

}  // namespace detail

// Spin-s representation on polynomials of degree <= 2s, realised as
// homogeneous polynomials P(z1, z2) of degree 2s with f(z) = P(z, 1) and
//   (π_s(g) P)(v) = P(gᵀ v),
// i.e. for g = [[a, b], [c, d]]
//   (π_s(g) f)(z) = (b z + d)^{2s} f((a z + c) / (b z + d)).
// This is a homomorphism, unitary for ⟨z^j, z^k⟩ = δ_jk j!(2s-j)!/(2s+1)!.

/// Matrix of π_s(g) on the monomial basis z^0 .. z^{2s}.
inline MatC spin_rep(Spin s, const Mat2& g) {
  require_special_unitary(g);
  const int n = s.twice();
  MatC m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) m(j, k) = detail::spin_monomial_entry(n, g, j, k);
  return m;
}

/// Gram matrix of the invariant inner product on the monomial basis.
inline Eigen::MatrixXd spin_gram(Spin s) {
  const int n = s.twice();
  Eigen::MatrixXd gmat = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) gmat(j, j) = std::exp(2.0 * detail::log_spin_norm(n, j));
  return gmat;
}

/// Leading rows x cols block of π_s(g) in the orthonormal basis z^k/‖z^k‖.
/// Only the needed entries are formed, so large s stays cheap.
inline MatC spin_rep_orthonormal_block(Spin s, const Mat2& g, int rows, int cols) {
  require_special_unitary(g);
  const int n = s.twice();
  if (rows < 0 || cols < 0 || rows > n + 1 || cols > n + 1) throw ValidationError("spin block exceeds 2s+1");
  MatC m(rows, cols);
  for (int k = 0; k < cols; ++k)
    for (int j = 0; j < rows; ++j)
      m(j, k) = detail::spin_monomial_entry(n, g, j, k) *
                std::exp(detail::log_spin_norm(n, j) - detail::log_spin_norm(n, k));
  return m;
}

// Bargmann–Fock representation of the Heisenberg group on holomorphic
// functions of w with ⟨w^j, w^k⟩ = δ_jk j!/λ^j. Group elements are written in
// exponential coordinates g = exp(x e1 + y e2 + t e3) with [e1, e2] = e3. With
// A = d/dw and A† = λ w ([A, A†] = λ) the generators are
//   dσ(e1) = -i(A + A†)/√2,  dσ(e2) = (A - A†)/√2,  dσ(e3) = iλ,
// so that σ(x, y, t) f(w) = e^{iλt} e^{-λ|β|²/2} e^{λβw} f(w - β̄) with
// β = -(y + i x)/√2. This orientation is the ε → 0 limit of the spin
// representations under the su2 → h3 contraction.

/// Matrix of σ_λ(x, y, t) on the monomial basis w^0 .. w^N. Entries are the
/// exact matrix elements of the infinite-dimensional operator.
inline MatC bargmann_rep(double lambda, double x, double y, double t, int cutoff) {
  if (!(lambda > 0.0)) throw ValidationError("Bargmann representation needs lambda > 0");
  if (cutoff < 1) throw ValidationError("Fock cutoff must be at least 1");
  const cd beta = -(cd(y, x)) / std::numbers::sqrt2;
  const cd prefactor = std::polar(std::exp(-0.5 * lambda * std::norm(beta)), lambda * t);
  const cd shift = -std::conj(beta);
  const cd growth = lambda * beta;
  MatC m = MatC::Zero(cutoff + 1, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) {
    for (int j = 0; j <= cutoff; ++j) {
      cd sum(0.0, 0.0);
      for (int i = 0; i <= std::min(j, k); ++i) {
        sum += detail::binomial(k, i) * detail::ipow(shift, k - i) * detail::ipow(growth, j - i) /
               std::exp(std::lgamma(j - i + 1.0));
      }
      m(j, k) = prefactor * sum;
    }
  }
  return m;
}

/// Gram matrix of the Bargmann inner product on w^0 .. w^N.
inline Eigen::MatrixXd fock_gram(double lambda, int cutoff) {
  Eigen::MatrixXd gmat = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int j = 0; j <= cutoff; ++j) gmat(j, j) = std::exp(2.0 * detail::log_fock_norm(lambda, j));
  return gmat;
}

/// σ_λ(x, y, t) in the orthonormal basis w^k/‖w^k‖, truncated to degree N.
inline MatC bargmann_rep_orthonormal(double lambda, double x, double y, double t, int cutoff) {
  MatC m = bargmann_rep(lambda, x, y, t, cutoff);
  for (int k = 0; k <= cutoff; ++k)
    for (int j = 0; j <= cutoff; ++j)
      m(j, k) *= std::exp(detail::log_fock_norm(lambda, j) - detail::log_fock_norm(lambda, k));
  return m;
}

/// Index-preserving isometry from the orthonormal spin basis into the
/// orthonormal Fock basis, (N+1) x (2s+1).
inline Eigen::MatrixXd embed_A(Spin s, int cutoff) {
  if (cutoff < 1) throw ValidationError("Fock cutoff must be at least 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff + 1, s.dim());
  for (int k = 0; k <= std::min(cutoff, s.twice()); ++k) a(k, k) = 1.0;
  return a;
}

struct SpinOperators {
  MatC J1, J2, J3;
};

/// Prequantum spin operators on the monomial basis:
///   J3 = ħ(z d/dz - s),  J+ = ħ(2s z - z² d/dz),  J- = ħ d/dz,
///   J1 = (J+ + J-)/2,    J2 = (J+ - J-)/(2i).
inline SpinOperators prequantum_spin_ops(Spin s, const QuantConfig& cfg = {}) {
  cfg.validate();
  const int n = s.twice();
  MatC jp = MatC::Zero(n + 1, n + 1), jm = MatC::Zero(n + 1, n + 1), j3 = MatC::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    j3(k, k) = k - s.value();
    if (k < n) jp(k + 1, k) = n - k;
    if (k > 0) jm(k - 1, k) = k;
  }
  SpinOperators ops;
  ops.J1 = cfg.hbar * 0.5 * (jp + jm);
  ops.J2 = cfg.hbar * (jp - jm) / cd(0.0, 2.0);
  ops.J3 = cfg.hbar * j3;
  return ops;
}

struct DimVolume {
  int dimension = 0;      // 2s + 1
  double volume = 0.0;    // (1/2πħ) ∫ ω over the sphere of radius s
};

/// Representation dimension next to the symplectic volume of the orbit. The
/// two differ by one; no correction is applied.
inline DimVolume dim_vs_volume(Spin s, const QuantConfig& cfg = {}) {
  if (s.twice() == 0) throw ValidationError("dim_vs_volume needs s > 0");
  return {s.dim(), sphere_integrality(s.value(), 128, 256, cfg).value};
}

}  // namespace liecontract::su2h

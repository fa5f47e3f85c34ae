#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "liecontract/error.hpp"

namespace liecontract::su2h {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

// Basis of su(2) used everywhere downstream: e_k = -(i/2) σ_k with the Pauli
// matrices σ_k. This gives [e1,e2] = e3 (cyclic), matching the su2 catalog
// entry, and exp of any real combination is special unitary.

inline Mat2 pauli(int k) {
  Mat2 m;
  switch (k) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: throw ValidationError("Pauli index must be 0, 1 or 2");
  }
  return m;
}

/// Σ x_k e_k as a 2x2 skew-Hermitian matrix.
inline Mat2 su2_matrix(const Eigen::Vector3d& x) {
  return cd(0, -0.5) * (x[0] * pauli(0) + x[1] * pauli(1) + x[2] * pauli(2));
}

/// exp(Σ x_k e_k) = cos(|x|/2) I - i sin(|x|/2) (x̂·σ).
inline Mat2 exp_su2(const Eigen::Vector3d& x) {
  const double theta = x.norm();
  if (theta == 0.0) return Mat2::Identity();
  const Eigen::Vector3d n = x / theta;
  const Mat2 ns = n[0] * pauli(0) + n[1] * pauli(1) + n[2] * pauli(2);
  return std::cos(theta / 2) * Mat2::Identity() - cd(0, std::sin(theta / 2)) * ns;
}

/// Throws unless g†g = I and det g = 1 within tol.
inline void require_special_unitary(const Mat2& g, double tol = 1e-10) {
  const double unit = (g.adjoint() * g - Mat2::Identity()).norm();
  if (!(unit <= tol)) throw ValidationError("matrix is not unitary (residual " + std::to_string(unit) + ")");
  const double det = std::abs(g.determinant() - cd(1, 0));
  if (!(det <= tol)) throw ValidationError("matrix does not have unit determinant (residual " + std::to_string(det) + ")");
}

/// Spin quantum number s ∈ ½ℕ, stored as the integer 2s.
class Spin {
public:
  static Spin from_twice(int two_s) {
    if (two_s < 0) throw ValidationError("spin must be non-negative");
    return Spin(two_s);
  }
  static Spin from_value(double s) {
    const double twice = 2.0 * s;
    const double r = std::round(twice);
    if (!(s >= 0.0) || std::abs(twice - r) > 1e-9 || r > 1e7) {
      throw ValidationError("spin must be a non-negative half-integer, got " + std::to_string(s));
    }
    return Spin(static_cast<int>(r));
  }

  int twice() const { return two_s_; }
  double value() const { return 0.5 * two_s_; }
  int dim() const { return two_s_ + 1; }

  friend bool operator==(Spin, Spin) = default;

private:
  explicit Spin(int two_s) : two_s_(two_s) {}
  int two_s_;
};

}  // namespace liecontract::su2h

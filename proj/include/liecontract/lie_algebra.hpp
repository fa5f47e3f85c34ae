#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "liecontract/error.hpp"
#include "liecontract/tolerances.hpp"

namespace liecontract {

/// Element of a Lie algebra, expanded in the algebra basis.
using Vector = Eigen::VectorXd;

/// Raw rank-3 tensor c[i][j][k] = coefficient of e_k in [e_i, e_j].
/// No Lie-algebra axioms are enforced here; see LieAlgebra for that.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets c[i][j][k] = value and c[j][i][k] = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, double value) {
    (*this)(i, j, k) = value;
    (*this)(j, i, k) = -value;
  }

  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Bracket of two vectors through a raw tensor.
inline Vector bracket(const StructureConstants& c, const Vector& x, const Vector& y) {
  const std::size_t n = c.dim();
  detail::require_dim(static_cast<std::size_t>(x.size()), n, "bracket lhs");
  detail::require_dim(static_cast<std::size_t>(y.size()), n, "bracket rhs");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

/// Max over basis triples of the Euclidean norm of the cyclic Jacobi sum
/// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
inline double jacobi_residual(const StructureConstants& c) {
  const std::size_t n = c.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        double sq = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
          double s = 0.0;
          for (std::size_t m = 0; m < n; ++m) {
            s += c(j, k, m) * c(i, m, p) + c(k, i, m) * c(j, m, p) + c(i, j, m) * c(k, m, p);
          }
          sq += s * s;
        }
        worst = std::max(worst, std::sqrt(sq));
      }
    }
  }
  return worst;
}

/// Finite-dimensional real Lie algebra given by structure constants.
/// Construction checks antisymmetry and the Jacobi identity; instances are
/// immutable afterwards.
class LieAlgebra {
public:
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants,
             double jacobi_tol = Tolerances{}.jacobi)
      : names_(std::move(basis_names)), c_(std::move(constants)) {
    const std::size_t n = c_.dim();
    if (n == 0) throw ValidationError("Lie algebra dimension must be positive");
    if (names_.size() != n) {
      throw DimensionError("basis has " + std::to_string(names_.size()) +
                           " names but tensor dimension is " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const double a = c_(i, j, k);
          if (!std::isfinite(a)) throw ValidationError("structure constants must be finite");
          if (std::abs(a + c_(j, i, k)) > jacobi_tol) {
            throw ValidationError("structure constants are not antisymmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
          }
        }
      }
    }
    const double r = jacobi_residual(c_);
    if (r > jacobi_tol) {
      throw ValidationError("Jacobi identity fails: residual " + std::to_string(r) +
                            " exceeds tolerance " + std::to_string(jacobi_tol));
    }
  }

  /// Algebra with default basis labels e1..en.
  static LieAlgebra with_default_names(StructureConstants constants,
                                       double jacobi_tol = Tolerances{}.jacobi) {
    return LieAlgebra(default_names(constants.dim()), std::move(constants), jacobi_tol);
  }

  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
  }

  std::size_t dim() const { return c_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& constants() const { return c_; }
  double c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  Vector basis_vector(std::size_t i) const {
    if (i >= dim()) throw ValidationError("basis index out of range");
    return Vector::Unit(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(i));
  }

  /// Matrix of ad_x, so that ad(x) * y == bracket(x, y).
  Eigen::MatrixXd ad(const Vector& x) const {
    detail::require_dim(static_cast<std::size_t>(x.size()), dim(), "ad");
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (x[i] == 0.0) continue;
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) m(k, j) += x[i] * c_(i, j, k);
    }
    return m;
  }

private:
  std::vector<std::string> names_;
  StructureConstants c_;
};

inline Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  return bracket(alg.constants(), x, y);
}

inline double jacobi_residual(const LieAlgebra& alg) { return jacobi_residual(alg.constants()); }

struct CentralSeries {
  std::vector<std::size_t> dims;  // dim g, dim [g,g], dim [g,[g,g]], ...
  bool nilpotent = false;
};

namespace detail {

/// Orthonormal basis (columns) of the column span of m.
inline Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m, double tol) {
  if (m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace detail

/// Dimensions of g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... until the series stabilizes.
inline CentralSeries lower_central_series(const LieAlgebra& alg, double tol = 1e-10) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  CentralSeries out;
  Eigen::MatrixXd current = Eigen::MatrixXd::Identity(n, n);
  out.dims.push_back(static_cast<std::size_t>(n));
  while (current.cols() > 0) {
    Eigen::MatrixXd spanning(n, n * current.cols());
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::MatrixXd adi = alg.ad(Vector::Unit(n, i));
      for (Eigen::Index j = 0; j < current.cols(); ++j) spanning.col(col++) = adi * current.col(j);
    }
    Eigen::MatrixXd next = detail::orthonormal_span(spanning, tol);
    out.dims.push_back(static_cast<std::size_t>(next.cols()));
    if (next.cols() == current.cols()) break;  // stabilized
    current = std::move(next);
  }
  out.nilpotent = out.dims.back() == 0;
  return out;
}

/// True iff span{e_i : i in idx} is closed under the bracket.
inline bool is_subalgebra(const LieAlgebra& alg, const std::vector<std::size_t>& idx,
                          double tol = Tolerances{}.subspace) {
  const std::size_t n = alg.dim();
  std::vector<bool> inside(n, false);
  for (std::size_t i : idx) {
    if (i >= n) {
      throw ValidationError("subspace index " + std::to_string(i) + " out of range for dimension " +
                            std::to_string(n));
    }
    inside[i] = true;
  }
  for (std::size_t i : idx)
    for (std::size_t j : idx)
      for (std::size_t k = 0; k < n; ++k)
        if (!inside[k] && std::abs(alg.c(i, j, k)) > tol) return false;
  return true;
}

}  // namespace liecontract

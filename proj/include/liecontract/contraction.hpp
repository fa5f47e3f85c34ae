#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "liecontract/convergence.hpp"
#include "liecontract/lie_algebra.hpp"

namespace liecontract {

/// Form of the contraction matrix U_ε built from the diagonal u.
///   iw      U = ε Id + (1-ε) u
///   anti_iw U = ε² Id + ε(1-ε) u
///   powers  U = diag(ε^{a_i})
enum class Variant { iw, anti_iw, powers };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::iw: return "iw";
    case Variant::anti_iw: return "anti";
    case Variant::powers: return "powers";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "iw" || s == "IW") return Variant::iw;
  if (s == "anti" || s == "anti_iw" || s == "ANTI_IW") return Variant::anti_iw;
  if (s == "powers" || s == "POWERS") return Variant::powers;
  throw ValidationError("unknown contraction variant '" + std::string(s) + "' (iw|anti|powers)");
}

/// Diagonal contraction data. Only diagonal u is supported.
class ContractionSpec {
public:
  static ContractionSpec iw(std::vector<double> u) { return {Variant::iw, std::move(u), {}}; }
  static ContractionSpec anti_iw(std::vector<double> u) {
    return {Variant::anti_iw, std::move(u), {}};
  }
  static ContractionSpec powers(std::vector<double> exponents) {
    return {Variant::powers, {}, std::move(exponents)};
  }
  static ContractionSpec make(Variant v, std::vector<double> u, std::vector<double> exponents = {}) {
    return v == Variant::powers ? powers(std::move(exponents)) : ContractionSpec(v, std::move(u), {});
  }

  /// Builds a spec from a full matrix; off-diagonal entries are rejected.
  static ContractionSpec from_matrix(Variant v, const Eigen::MatrixXd& u) {
    if (v == Variant::powers) throw ValidationError("powers variant takes exponents, not a matrix");
    if (u.rows() != u.cols()) throw DimensionError("contraction matrix must be square");
    std::vector<double> diag(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        if (i != j && u(i, j) != 0.0) {
          throw ValidationError("contraction matrix must be diagonal; entry (" + std::to_string(i) +
                                "," + std::to_string(j) + ") is nonzero");
        }
      }
      diag[static_cast<std::size_t>(i)] = u(i, i);
    }
    return {v, std::move(diag), {}};
  }

  Variant variant() const { return variant_; }
  std::size_t dim() const { return variant_ == Variant::powers ? powers_.size() : u_.size(); }
  const std::vector<double>& u() const { return u_; }
  const std::vector<double>& exponents() const { return powers_; }

  /// Indices with u_i == 0.
  std::vector<std::size_t> null_indices() const { return split(true); }
  /// Indices with u_i != 0.
  std::vector<std::size_t> range_indices() const { return split(false); }
  bool in_range(std::size_t k) const { return u_.at(k) != 0.0; }

private:
  ContractionSpec(Variant v, std::vector<double> u, std::vector<double> p)
      : variant_(v), u_(std::move(u)), powers_(std::move(p)) {
    if (variant_ == Variant::powers) {
      if (powers_.empty()) throw ValidationError("powers variant needs one exponent per basis vector");
      for (double a : powers_)
        if (!std::isfinite(a)) throw ValidationError("powers exponents must be finite");
    } else {
      if (u_.empty()) throw ValidationError("u must have one entry per basis vector");
      for (double x : u_)
        if (!std::isfinite(x) || x < 0.0) throw ValidationError("u entries must be finite and non-negative");
    }
  }

  std::vector<std::size_t> split(bool null) const {
    if (variant_ == Variant::powers) throw ValidationError("powers variant has no V_N/V_R splitting");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < u_.size(); ++i)
      if ((u_[i] == 0.0) == null) out.push_back(i);
    return out;
  }

  Variant variant_;
  std::vector<double> u_;
  std::vector<double> powers_;
};

namespace detail {

inline void require_uspec(const LieAlgebra& alg, const ContractionSpec& spec, const char* what) {
  if (spec.variant() == Variant::powers) {
    throw ValidationError(std::string(what) + " needs a u diagonal (iw or anti variant)");
  }
  require_dim(spec.dim(), alg.dim(), what);
}

inline Vector apply_diag(const std::vector<double>& d, const Vector& x) {
  Vector out = x;
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] *= d[static_cast<std::size_t>(k)];
  return out;
}

inline std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os.precision(6);
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace detail

/// T[u](e_i, e_j) for every basis pair, with its V_N / V_R projection norms.
class IWTensorTable {
public:
  struct Entry {
    std::size_t i = 0, j = 0;
    Vector value;
    double null_norm = 0.0;   // ‖projection onto V_N‖₂
    double range_norm = 0.0;  // ‖projection onto V_R‖₂
  };

  IWTensorTable(std::size_t dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// T[u](e_i, e_j), using antisymmetry for i > j.
  Vector at(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw ValidationError("IW-tensor index out of range");
    if (i == j) return Vector::Zero(static_cast<Eigen::Index>(dim_));
    const auto lo = std::min(i, j), hi = std::max(i, j);
    const Vector& v = entries_[pair_index(lo, hi)].value;
    return i < j ? v : Vector(-v);
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.value.norm());
    return m;
  }
  double max_null_norm() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.null_norm);
    return m;
  }
  double max_range_norm() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.range_norm);
    return m;
  }

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // row-major enumeration of i < j
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::size_t dim_;
  std::vector<Entry> entries_;
};

/// T[u](x, y) = u²[x,y] - u([ux,y] + [x,uy]) + [ux,uy] for arbitrary vectors.
inline Vector iw_tensor(const LieAlgebra& alg, const ContractionSpec& spec, const Vector& x,
                        const Vector& y) {
  detail::require_uspec(alg, spec, "iw_tensor");
  const auto& u = spec.u();
  const Vector ux = detail::apply_diag(u, x);
  const Vector uy = detail::apply_diag(u, y);
  const Vector xy = bracket(alg, x, y);
  return detail::apply_diag(u, detail::apply_diag(u, xy)) -
         detail::apply_diag(u, bracket(alg, ux, y) + bracket(alg, x, uy)) + bracket(alg, ux, uy);
}

inline IWTensorTable iw_tensor(const LieAlgebra& alg, const ContractionSpec& spec) {
  detail::require_uspec(alg, spec, "iw_tensor");
  const std::size_t n = alg.dim();
  std::vector<IWTensorTable::Entry> entries;
  entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IWTensorTable::Entry e;
      e.i = i;
      e.j = j;
      e.value = iw_tensor(alg, spec, alg.basis_vector(i), alg.basis_vector(j));
      double nn = 0.0, rr = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double v = e.value[static_cast<Eigen::Index>(k)];
        (spec.in_range(k) ? rr : nn) += v * v;
      }
      e.null_norm = std::sqrt(nn);
      e.range_norm = std::sqrt(rr);
      entries.push_back(std::move(e));
    }
  }
  return IWTensorTable(n, std::move(entries));
}

enum class Classification { iw_valid, anti_iw_valid, both, neither, isomorphic };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::iw_valid: return "IW_VALID";
    case Classification::anti_iw_valid: return "ANTI_IW_VALID";
    case Classification::both: return "BOTH";
    case Classification::neither: return "NEITHER";
    case Classification::isomorphic: return "ISOMORPHIC";
  }
  return "?";
}

/// Evaluates both contraction conditions: T ∈ V_R admits an IW contraction,
/// T ∈ V_N an anti-IW contraction. T ≡ 0 with invertible u is ISOMORPHIC;
/// T ≡ 0 with singular u satisfies both conditions and is BOTH.
inline Classification classify(const IWTensorTable& table, const ContractionSpec& spec,
                               double tol = Tolerances{}.membership) {
  const bool iw_ok = table.max_null_norm() <= tol;
  const bool anti_ok = table.max_range_norm() <= tol;
  if (table.max_norm() <= tol) {
    return spec.null_indices().empty() ? Classification::isomorphic : Classification::both;
  }
  if (iw_ok && anti_ok) return Classification::both;
  if (iw_ok) return Classification::iw_valid;
  if (anti_ok) return Classification::anti_iw_valid;
  return Classification::neither;
}

inline Classification classify(const LieAlgebra& alg, const ContractionSpec& spec,
                               double tol = Tolerances{}.membership) {
  return classify(iw_tensor(alg, spec), spec, tol);
}

/// [x,y]' = [ux,y] + [x,uy] - u[x,y].
inline Vector primed_bracket(const LieAlgebra& alg, const ContractionSpec& spec, const Vector& x,
                             const Vector& y) {
  detail::require_uspec(alg, spec, "primed_bracket");
  const auto& u = spec.u();
  return bracket(alg, detail::apply_diag(u, x), y) + bracket(alg, x, detail::apply_diag(u, y)) -
         detail::apply_diag(u, bracket(alg, x, y));
}

/// u⁻¹ on V_R. Vectors with a V_N component above `tol` are rejected.
inline Vector inverse_on_range(const ContractionSpec& spec, const Vector& v, double tol) {
  Vector out = Vector::Zero(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double uk = spec.u()[static_cast<std::size_t>(k)];
    if (uk == 0.0) {
      if (std::abs(v[k]) > tol) {
        throw ValidationError("u^-1 applied to a vector with V_N component " + std::to_string(v[k]) +
                              " on e" + std::to_string(k + 1));
      }
    } else {
      out[k] = v[k] / uk;
    }
  }
  return out;
}

namespace detail {

inline void refuse_if(const IWTensorTable& table, bool iw, double tol) {
  for (const auto& e : table.entries()) {
    const double bad = iw ? e.null_norm : e.range_norm;
    if (bad > tol) {
      throw ValidationError(std::string(iw ? "IW" : "anti-IW") + " contraction refused: T[u](e" +
                            std::to_string(e.i + 1) + ",e" + std::to_string(e.j + 1) + ") = " +
                            format_vector(e.value) + " has " + (iw ? "V_N" : "V_R") +
                            " component of norm " + std::to_string(bad));
    }
  }
}

}  // namespace detail

/// Contracted bracket [x,y]_0 = [x,y]' + u⁻¹T[u](x,y) of the IW contraction.
inline LieAlgebra contracted_bracket_iw(const LieAlgebra& alg, const ContractionSpec& spec,
                                        const Tolerances& tol = {}) {
  const IWTensorTable table = iw_tensor(alg, spec);
  detail::refuse_if(table, true, tol.membership);
  const std::size_t n = alg.dim();
  StructureConstants c0(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = primed_bracket(alg, spec, alg.basis_vector(i), alg.basis_vector(j)) +
                       inverse_on_range(spec, table.at(i, j), tol.membership);
      for (std::size_t k = 0; k < n; ++k) c0.set_antisymmetric(i, j, k, v[static_cast<Eigen::Index>(k)]);
    }
  }
  return LieAlgebra(alg.basis_names(), std::move(c0), tol.contracted_jacobi);
}

/// Contracted bracket [x,y]_0 = T[u](x,y) of the anti-IW contraction.
inline LieAlgebra contracted_bracket_anti(const LieAlgebra& alg, const ContractionSpec& spec,
                                          const Tolerances& tol = {}) {
  const IWTensorTable table = iw_tensor(alg, spec);
  detail::refuse_if(table, false, tol.membership);
  const std::size_t n = alg.dim();
  StructureConstants c0(n);
  for (const auto& e : table.entries())
    for (std::size_t k = 0; k < n; ++k) c0.set_antisymmetric(e.i, e.j, k, e.value[static_cast<Eigen::Index>(k)]);
  return LieAlgebra(alg.basis_names(), std::move(c0), tol.contracted_jacobi);
}

/// Limit of diag(ε^a)⁻¹[diag(ε^a)e_i, diag(ε^a)e_j] by power counting: the
/// coefficient c_ijk scales as ε^{a_i+a_j-a_k}. Throws when a nonzero
/// coefficient carries a negative power.
inline LieAlgebra power_counting_limit(const LieAlgebra& alg, const ContractionSpec& spec,
                                       const Tolerances& tol = {}) {
  if (spec.variant() != Variant::powers) throw ValidationError("power counting needs the powers variant");
  detail::require_dim(spec.dim(), alg.dim(), "power_counting_limit");
  const auto& a = spec.exponents();
  const std::size_t n = alg.dim();
  StructureConstants c0(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double c = alg.c(i, j, k);
        if (c == 0.0) continue;
        const double p = a[i] + a[j] - a[k];
        if (p < -1e-12) {
          throw ValidationError("powers contraction diverges: [e" + std::to_string(i + 1) + ",e" +
                                std::to_string(j + 1) + "] component on e" + std::to_string(k + 1) +
                                " scales as eps^" + std::to_string(p));
        }
        if (p <= 1e-12) c0.set_antisymmetric(i, j, k, c);
      }
    }
  }
  return LieAlgebra(alg.basis_names(), std::move(c0), tol.contracted_jacobi);
}

/// Closed-form contracted algebra for the spec's variant.
inline LieAlgebra contract(const LieAlgebra& alg, const ContractionSpec& spec, const Tolerances& tol = {}) {
  switch (spec.variant()) {
    case Variant::iw: return contracted_bracket_iw(alg, spec, tol);
    case Variant::anti_iw: return contracted_bracket_anti(alg, spec, tol);
    case Variant::powers: return power_counting_limit(alg, spec, tol);
  }
  throw ValidationError("unknown variant");
}

/// Diagonal of U_ε.
inline Vector build_U(const ContractionSpec& spec, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  const auto n = static_cast<Eigen::Index>(spec.dim());
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    switch (spec.variant()) {
      case Variant::iw: d[i] = eps + (1.0 - eps) * spec.u()[k]; break;
      case Variant::anti_iw: d[i] = eps * eps + eps * (1.0 - eps) * spec.u()[k]; break;
      case Variant::powers: d[i] = std::pow(eps, spec.exponents()[k]); break;
    }
  }
  return d;
}

/// Structure constants of U⁻¹[U e_i, U e_j] evaluated by brute force.
inline StructureConstants conjugated_constants(const LieAlgebra& alg, const Vector& U) {
  const std::size_t n = alg.dim();
  detail::require_dim(static_cast<std::size_t>(U.size()), n, "conjugated_constants");
  StructureConstants out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = bracket(alg, U[static_cast<Eigen::Index>(i)] * alg.basis_vector(i),
                               U[static_cast<Eigen::Index>(j)] * alg.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        out.set_antisymmetric(i, j, k, b[kk] / U[kk]);
      }
    }
  }
  return out;
}

struct LimitOptions {
  double converged_below = 1e-6;  // final error required for a converged verdict
  double overflow_at = 1e12;      // conjugated entries beyond this count as divergence
};

/// Evaluates U_ε⁻¹[U_ε e_i, U_ε e_j] along `schedule` and compares with the
/// closed-form contracted bracket. When no closed form exists (the
/// contraction is refused) errors are successive differences and
/// growth of the conjugated constants is reported as divergence.
inline ConvergenceReport numeric_limit(const LieAlgebra& alg, const ContractionSpec& spec,
                                       const std::vector<double>& schedule,
                                       const LimitOptions& opts = {}, const Tolerances& tol = {}) {
  validate_schedule(schedule);
  detail::require_dim(spec.dim(), alg.dim(), "numeric_limit");
  const std::size_t n = alg.dim();

  ConvergenceReport rep;
  std::optional<StructureConstants> reference;
  try {
    reference = contract(alg, spec, tol).constants();
  } catch (const ValidationError& e) {
    rep.diagnostic = std::string("no closed-form limit: ") + e.what();
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rep.component_labels.push_back("e" + std::to_string(i + 1) + "_e" + std::to_string(j + 1));

  std::vector<StructureConstants> estimates;
  double largest = 0.0;
  bool overflow = false;
  for (double eps : schedule) {
    const Vector U = build_U(spec, eps);
    bool bad_u = false;
    for (Eigen::Index k = 0; k < U.size(); ++k)
      if (!(U[k] > 0.0) || !std::isfinite(1.0 / U[k])) bad_u = true;
    if (bad_u) {
      overflow = true;
      rep.diagnostic += (rep.diagnostic.empty() ? "" : "; ") +
                        std::string("U_eps^-1 overflows at eps=") + std::to_string(eps);
      break;
    }
    StructureConstants est = conjugated_constants(alg, U);
    for (double v : est.data()) {
      if (!std::isfinite(v) || std::abs(v) > opts.overflow_at) overflow = true;
      largest = std::max(largest, std::abs(v));
    }
    rep.eps_values.push_back(eps);
    estimates.push_back(std::move(est));
    if (overflow) {
      rep.diagnostic += (rep.diagnostic.empty() ? "" : "; ") +
                        std::string("conjugated constants exceed ") + std::to_string(opts.overflow_at) +
                        " at eps=" + std::to_string(eps);
      break;
    }
  }
  if (estimates.empty()) {
    rep.verdict = Verdict::diverged;
    rep.fitted_rate = std::nan("");
    return rep;
  }

  // Without a closed form each estimate is compared with its predecessor
  // (the first with the original constants), so growth shows up as error.
  for (std::size_t m = 0; m < estimates.size(); ++m) {
    const StructureConstants& est = estimates[m];
    const StructureConstants& target =
        reference ? *reference : (m == 0 ? alg.constants() : estimates[m - 1]);
    double worst = 0.0;
    std::vector<double> pairwise;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double e = 0.0;
        for (std::size_t k = 0; k < n; ++k) e = std::max(e, std::abs(est(i, j, k) - target(i, j, k)));
        pairwise.push_back(e);
        worst = std::max(worst, e);
      }
    }
    rep.errors.push_back(worst);
    rep.component_errors.push_back(std::move(pairwise));
  }
  rep.fitted_rate = fit_log_rate(rep.eps_values, rep.errors);
  rep.limit_estimate = estimates.back();

  const double first_scale = [&] {
    double m = 0.0;
    for (double v : estimates.front().data()) m = std::max(m, std::abs(v));
    return m;
  }();
  if (overflow) {
    rep.verdict = Verdict::diverged;
  } else if (reference) {
    const double final_err = rep.errors.back();
    const bool exact = std::all_of(rep.errors.begin(), rep.errors.end(), [](double e) { return e < 1e-14; });
    if (final_err < opts.converged_below && (exact || rep.fitted_rate > 0.0)) {
      rep.verdict = Verdict::converged;
    } else if (rep.fitted_rate < 0.0) {
      rep.verdict = Verdict::diverged;
    } else {
      rep.verdict = Verdict::inconclusive;
    }
  } else {
    // Without a closed form, growth of the conjugated constants along the
    // schedule is the only usable signal.
    rep.verdict = largest > 1e3 * std::max(first_scale, 1.0) ? Verdict::diverged : Verdict::inconclusive;
  }
  return rep;
}

/// Outcome of the structural theorems and remarks for one contraction.
struct StructuralReport {
  // anti-IW with V_N a subalgebra: contracted algebra is nilpotent
  bool nilpotent_applicable = false;
  CentralSeries series;
  // IW with V_R a subalgebra: [N,N]_0 = 0, [R,R]_0 ⊆ R, [R,N]_0 ⊆ N
  bool semidirect_applicable = false;
  double nn_residual = 0.0;
  double rr_residual = 0.0;
  double rn_residual = 0.0;
  // T ≡ 0: ‖[ux,uy] - u[x,y]'‖ on basis pairs
  bool homomorphism_applicable = false;
  double homomorphism_residual = 0.0;
  // [x,y]' ≡ 0: u is a derivation
  bool derivation = false;

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline StructuralReport structural_checks(const LieAlgebra& original, const LieAlgebra& contracted,
                                          const ContractionSpec& spec, const Tolerances& tol = {}) {
  detail::require_uspec(original, spec, "structural_checks");
  detail::require_dim(contracted.dim(), original.dim(), "structural_checks");
  const std::size_t n = original.dim();
  const double eps = tol.membership;
  const auto null = spec.null_indices();
  const auto range = spec.range_indices();

  StructuralReport rep;
  rep.series = lower_central_series(contracted);

  if (spec.variant() == Variant::anti_iw && is_subalgebra(original, null, tol.subspace)) {
    rep.nilpotent_applicable = true;
    if (!rep.series.nilpotent) rep.failures.push_back("V_N is a subalgebra but the contraction is not nilpotent");
  }

  if (spec.variant() == Variant::iw && is_subalgebra(original, range, tol.subspace)) {
    rep.semidirect_applicable = true;
    for (std::size_t i : null)
      for (std::size_t j : null)
        for (std::size_t k = 0; k < n; ++k) rep.nn_residual = std::max(rep.nn_residual, std::abs(contracted.c(i, j, k)));
    for (std::size_t i : range)
      for (std::size_t j : range)
        for (std::size_t k : null) rep.rr_residual = std::max(rep.rr_residual, std::abs(contracted.c(i, j, k)));
    for (std::size_t i : range)
      for (std::size_t j : null)
        for (std::size_t k : range) rep.rn_residual = std::max(rep.rn_residual, std::abs(contracted.c(i, j, k)));
    if (rep.nn_residual > eps) rep.failures.push_back("[V_N,V_N]_0 is not zero");
    if (rep.rr_residual > eps) rep.failures.push_back("[V_R,V_R]_0 leaves V_R");
    if (rep.rn_residual > eps) rep.failures.push_back("[V_R,V_N]_0 leaves V_N");
  }

  const IWTensorTable table = iw_tensor(original, spec);
  double primed_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = original.basis_vector(i), ej = original.basis_vector(j);
      const Vector primed = primed_bracket(original, spec, ei, ej);
      primed_max = std::max(primed_max, primed.norm());
      if (table.max_norm() <= eps) {
        const Vector lhs = bracket(original, detail::apply_diag(spec.u(), ei), detail::apply_diag(spec.u(), ej));
        rep.homomorphism_residual =
            std::max(rep.homomorphism_residual, (lhs - detail::apply_diag(spec.u(), primed)).norm());
      }
    }
  }
  rep.homomorphism_applicable = table.max_norm() <= eps;
  if (rep.homomorphism_applicable && rep.homomorphism_residual > eps) {
    rep.failures.push_back("T vanishes but u is not a homomorphism onto [.,.]'");
  }
  rep.derivation = primed_max <= eps;
  return rep;
}

}  // namespace liecontract

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "liecontract/contraction.hpp"
#include "liecontract/representations.hpp"

namespace liecontract::su2h {

/// Heisenberg group element in exponential coordinates exp(x e1 + y e2 + t e3).
struct HeisenbergElement {
  double x = 0.0, y = 0.0, t = 0.0;
};

/// The su2 → h3 contraction: anti-IW with u = diag(1, 1, 0), i.e.
/// U_ε = diag(ε, ε, ε²). Its ε → 0 limit on the su2 catalog is heisenberg3.
inline ContractionSpec su2_to_heisenberg_spec() { return ContractionSpec::anti_iw({1.0, 1.0, 0.0}); }

/// Φ_ε(g) = exp_SU(2)(U_ε (x e1 + y e2 + t e3)).
inline Mat2 phi_eps(const ContractionSpec& spec, double eps, const HeisenbergElement& g) {
  liecontract::detail::require_dim(spec.dim(), 3, "phi_eps");
  const Vector u = build_U(spec, eps);
  return exp_su2(Eigen::Vector3d(u[0] * g.x, u[1] * g.y, u[2] * g.t));
}

// Coupling between spin and contraction parameter. Along the su2 → h3 spec,
// U_ε scales e3 by ε², so the central element acts on the extremal weight
// vectors by exp(i ε² s t). Matching the Heisenberg character e^{iλt}
// requires ε² s = λ / coupling with coupling = 1; this is the same relation
// s = ⌊λ/δ⌋ that ties the deformed transition functions to δ = ε².
struct MnOptions {
  double coupling = 1.0;
  int cutoff = -1;  // Fock truncation N; defaults to 2K
};

/// Contraction parameter of the su2 → h3 spec paired with spin s.
inline double mn_eps(double lambda, Spin s, double coupling = 1.0) {
  if (!(lambda > 0.0)) throw ValidationError("mn_error needs lambda > 0");
  if (!(coupling > 0.0)) throw ValidationError("coupling must be positive");
  if (s.twice() == 0) throw ValidationError("mn_error needs s > 0");
  const double eps = std::sqrt(lambda / (coupling * s.value()));
  if (!(eps < 1.0)) throw ValidationError("spin too small for lambda: need s > lambda / coupling");
  return eps;
}

/// Operator norm of the leading K x K block of A π_s(Φ_ε(g)) A† - σ_λ(g).
inline double mn_error(double lambda, const HeisenbergElement& g, Spin s, int block, const MnOptions& opts = {}) {
  const int cutoff = opts.cutoff < 0 ? 2 * block : opts.cutoff;
  if (block < 1) throw ValidationError("comparison block must be at least 1");
  if (block > std::min(s.twice(), cutoff) + 1) {
    throw ValidationError("block K=" + std::to_string(block) + " exceeds min(2s, N)+1 = " +
                          std::to_string(std::min(s.twice(), cutoff) + 1));
  }
  const double eps = mn_eps(lambda, s, opts.coupling);
  const Mat2 elem = phi_eps(su2_to_heisenberg_spec(), eps, g);
  // A is the identity on the first min(N, 2s)+1 indices, so the leading
  // block of A π A† is the leading block of π in the orthonormal basis.
  const MatC spin_block = spin_rep_orthonormal_block(s, elem, block, block);
  const MatC fock_block = bargmann_rep_orthonormal(lambda, g.x, g.y, g.t, cutoff).topLeftCorner(block, block);
  Eigen::JacobiSVD<MatC> svd(spin_block - fock_block);
  return svd.singularValues()[0];
}

struct MnPoint {
  Spin s;
  double eps = 0.0;
  double error = 0.0;
};

inline std::vector<MnPoint> mn_sweep(double lambda, const HeisenbergElement& g, const std::vector<Spin>& spins,
                                     int block, const MnOptions& opts = {}) {
  std::vector<MnPoint> out;
  out.reserve(spins.size());
  for (Spin s : spins) out.push_back({s, mn_eps(lambda, s, opts.coupling), mn_error(lambda, g, s, block, opts)});
  return out;
}

}  // namespace liecontract::su2h

#pragma once

#include <cstdlib>
#include <string>

#include "liecontract/error.hpp"

namespace liecontract {

/// Numerical thresholds used across the library. Inputs are small integer
/// structure constants, so valid identities hold to rounding.
struct Tolerances {
  double jacobi = 1e-12;             // Jacobi residual accepted at construction
  double subspace = 1e-12;           // subspace membership (is_subalgebra)
  double membership = 1e-10;         // IW-tensor projections onto V_N / V_R
  double contracted_jacobi = 1e-10;  // Jacobi residual of contracted outputs
  double singular_value = 1e-10;     // nullspace cut-off for stabilizers

  /// Defaults, with every field replaced by LIE_CONTRACT_TOL when set.
  static Tolerances from_env() {
    Tolerances tol;
    if (const char* raw = std::getenv("LIE_CONTRACT_TOL"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      const double v = std::strtod(raw, &end);
      if (end == raw || *end != '\0' || !(v > 0.0)) {
        throw ValidationError("LIE_CONTRACT_TOL must be a positive number, got '" +
                              std::string(raw) + "'");
      }
      tol.jacobi = tol.subspace = tol.membership = tol.contracted_jacobi = tol.singular_value = v;
    }
    return tol;
  }
};

}  // namespace liecontract

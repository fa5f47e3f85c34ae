#pragma once

#include <array>
#include <charconv>
#include <string>
#include <string_view>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

// Basis conventions (1-based labels, 0-based indices in code):
//   su2         [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2        (real so(3) form)
//   heisenberg3 [e1,e2]=e3, e3 central
//   euclid2     [e3,e1]=e2, [e2,e3]=e1, [e1,e2]=0         (e3 is the rotation)
//   sl2r        e1=h, e2=e, e3=f: [h,e]=2e, [h,f]=-2f, [e,f]=h
//   abelian_n   all brackets zero, n >= 1

inline constexpr std::array<std::string_view, 5> catalog_names = {"su2", "heisenberg3", "euclid2",
                                                                  "sl2r", "abelian_n"};

inline LieAlgebra su2() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 2, 1.0);
  c.set_antisymmetric(1, 2, 0, 1.0);
  c.set_antisymmetric(2, 0, 1, 1.0);
  return LieAlgebra::with_default_names(std::move(c));
}

inline LieAlgebra heisenberg3() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 2, 1.0);
  return LieAlgebra::with_default_names(std::move(c));
}

inline LieAlgebra euclid2() {
  StructureConstants c(3);
  c.set_antisymmetric(2, 0, 1, 1.0);
  c.set_antisymmetric(1, 2, 0, 1.0);
  return LieAlgebra::with_default_names(std::move(c));
}

inline LieAlgebra sl2r() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 1, 2.0);
  c.set_antisymmetric(0, 2, 2, -2.0);
  c.set_antisymmetric(1, 2, 0, 1.0);
  return LieAlgebra({"h", "e", "f"}, std::move(c));
}

inline LieAlgebra abelian(std::size_t n) {
  return LieAlgebra::with_default_names(StructureConstants(n));
}

/// Looks up a catalog algebra; "abelian_<n>" selects the n-dimensional abelian algebra.
inline LieAlgebra catalog(std::string_view name) {
  if (name == "su2") return su2();
  if (name == "heisenberg3" || name == "h3") return heisenberg3();
  if (name == "euclid2") return euclid2();
  if (name == "sl2r") return sl2r();
  constexpr std::string_view prefix = "abelian_";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n > 0) return abelian(n);
  }
  throw ValidationError("unknown catalog algebra '" + std::string(name) + "'");
}

}  // namespace liecontract

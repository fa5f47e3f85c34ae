#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

// File format:
//   {"dim": n, "basis": ["e1", ...],
//    "brackets": [{"i": 0, "j": 1, "out": {"2": 1.0}}, ...]}
// Only i < j entries are stored; loading completes antisymmetrically.

inline nlohmann::json to_json(const LieAlgebra& alg) {
  nlohmann::json brackets = nlohmann::json::array();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      nlohmann::json out = nlohmann::json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (alg.c(i, j, k) != 0.0) out[std::to_string(k)] = alg.c(i, j, k);
      if (!out.empty()) brackets.push_back({{"i", i}, {"j", j}, {"out", out}});
    }
  }
  return {{"dim", n}, {"basis", alg.basis_names()}, {"brackets", brackets}};
}

inline LieAlgebra from_json(const nlohmann::json& doc, double jacobi_tol = Tolerances{}.jacobi) {
  try {
    const auto n = doc.at("dim").get<std::size_t>();
    if (n == 0) throw ValidationError("algebra file: dim must be positive");
    std::vector<std::string> names;
    if (doc.contains("basis")) {
      names = doc.at("basis").get<std::vector<std::string>>();
    } else {
      names = LieAlgebra::default_names(n);
    }
    StructureConstants c(n);
    for (const auto& entry : doc.at("brackets")) {
      const auto i = entry.at("i").get<std::size_t>();
      const auto j = entry.at("j").get<std::size_t>();
      if (i >= n || j >= n) throw IoError("algebra file: bracket index out of range");
      if (i >= j) throw IoError("algebra file: bracket entries must have i < j");
      for (const auto& [key, value] : entry.at("out").items()) {
        std::size_t pos = 0;
        const unsigned long k = std::stoul(key, &pos);
        if (pos != key.size() || k >= n) throw IoError("algebra file: bad output index '" + key + "'");
        c.set_antisymmetric(i, j, k, value.get<double>());
      }
    }
    return LieAlgebra(std::move(names), std::move(c), jacobi_tol);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("algebra file: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw IoError("algebra file: output keys must be integer indices");
  } catch (const std::out_of_range&) {
    throw IoError("algebra file: output index out of range");
  }
}

inline LieAlgebra load(const std::filesystem::path& path, double jacobi_tol = Tolerances{}.jacobi) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return from_json(doc, jacobi_tol);
}

inline void save(const LieAlgebra& alg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << to_json(alg).dump(2) << '\n';
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace liecontract

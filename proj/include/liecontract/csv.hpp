#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace liecontract::csv {

/// Fixed `%.12e` formatting so that repeated runs produce identical bytes.
inline std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

inline void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

}  // namespace liecontract::csv

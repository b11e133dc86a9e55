#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace dronecell::detail {

/// 9 significant digits, shortest printf form. Every number that reaches
/// a file passes through this so emitted bytes are a fixed point of
/// parse-then-format.
inline std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline double sig9_round(double v) { return std::strtod(sig9(v).c_str(), nullptr); }

}  // namespace dronecell::detail

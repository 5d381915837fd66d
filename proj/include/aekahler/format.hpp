#pragma once

#include <cstdio>
#include <string>

namespace aek {

/// Round-trip decimal form used by every CSV and JSON emitter.
inline std::string fmt17(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace aek

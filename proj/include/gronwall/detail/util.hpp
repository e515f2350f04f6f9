#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gronwall/errors.hpp"
#include "gronwall/signal.hpp"

namespace gronwall::detail {

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

/// Evaluate a signal at every grid node, rejecting non-finite values.
inline std::vector<double> sample_checked(const Signal& s, const Grid& g,
                                          const char* name) {
  std::vector<double> out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    out[i] = s(g.node(i));
    if (!std::isfinite(out[i])) {
      throw EvaluationError(std::string(name) + " is not finite at node " +
                            std::to_string(i) + " (t = " + num(g.node(i)) + ")");
    }
  }
  return out;
}

/// Relative slack 1e-7 * (1 + |magnitude|) used by all numeric inequality
/// checks that are exact in real arithmetic.
inline double rel_slack(double magnitude) {
  return 1e-7 * (1.0 + std::abs(magnitude));
}

}  // namespace gronwall::detail

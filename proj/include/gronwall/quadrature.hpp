#pragma once

#include <vector>

#include "gronwall/signal.hpp"

namespace gronwall {

/// Running composite-trapezoid integral of a signal along a grid:
/// values[i] = integral from t0 to node(i), values[0] = 0. A nonnegative
/// integrand yields a nondecreasing value vector (exactly, not just up to
/// roundoff, because every increment is a product of nonnegative terms).
struct CumulativeIntegral {
  Grid grid;
  std::vector<double> values;
};

/// Composite trapezoid accumulation node to node.
/// Throws EvaluationError naming the node if the signal is non-finite there.
CumulativeIntegral cumulative(const Signal& s, const Grid& g);

/// Trapezoid sum over nodes 0..t_index of exp(w[t_index] - w[i]) * s(node(i)).
/// With w the running integral of a rate v this evaluates the exponentially
/// weighted tail integral that appears in every bound formula. Returns 0 for
/// t_index == 0.
double weighted_tail_integral(const CumulativeIntegral& w, const Signal& s,
                              const Grid& g, int t_index);

}  // namespace gronwall

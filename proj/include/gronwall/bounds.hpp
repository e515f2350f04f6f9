#pragma once

#include <vector>

#include "gronwall/quadrature.hpp"
#include "gronwall/signal.hpp"

namespace gronwall {

/// Data of the integral inequality
///
///   u(t) <= c + int_{t0}^{t} v(z) u(z) dz + int_{t0}^{t} f(z) dz
///
/// sampled on `grid`. Hypotheses: c >= 0, v >= 0 at every node, and the
/// running integral of f nonnegative at every node (f itself may change
/// sign). Hypotheses are checked at grid nodes only; behaviour between
/// nodes is the caller's responsibility.
struct BoundProblem {
  double c;
  Signal v;
  Signal f;
  Grid grid;
};

/// Check every BoundProblem hypothesis. Throws ValidationError naming the
/// first offending node, or EvaluationError on non-finite signal values.
void validate(const BoundProblem& p);

/// b[i] = c * exp(V_i) with V = cumulative(v). The forcing f is ignored
/// (and not validated): this is the unforced bound.
std::vector<double> classic_bound(const BoundProblem& p);

/// b[i] = c * exp(V_i) + weighted tail integral of f with weight
/// exp(V_i - V_j). Reduces to classic_bound when f == 0.
std::vector<double> general_bound(const BoundProblem& p);

/// Simultaneous lower/upper bound curves on a grid; lower[i] <= upper[i]
/// at every node, and both start at the initial value they were built from.
struct Envelope {
  Grid grid;
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Two-sided envelope for nonnegative data:
///
///   upper[i] = u0 exp(V_i) + sum_j w_j exp(V_i - V_j) f_j
///   lower[i] = u0 exp(-V_i) - sum_j w_j exp(-(V_i - V_j)) f_j
///
/// (w_j the trapezoid weights). Requires u0 >= 0 and v, f >= 0 at every
/// node -- pointwise, stricter than BoundProblem's integral hypothesis on f.
/// The lower curve may go negative; it is reported without clamping and
/// callers may apply a max with 0 when they know the bounded quantity is
/// nonnegative.
Envelope two_sided_envelope(double u0, const Signal& v, const Signal& f,
                            const Grid& grid);

}  // namespace gronwall

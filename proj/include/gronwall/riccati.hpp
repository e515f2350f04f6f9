#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gronwall/bounds.hpp"
#include "gronwall/quadrature.hpp"
#include "gronwall/signal.hpp"

namespace gronwall {

/// Coefficients of the scalar Riccati equation in canonical form
///   y' + f(t) y^2 + g(t) y + h(t) = 0.
/// A linear equation is the special case f == 0. All equations in this
/// module are stored in this one sign convention.
struct RiccatiCoeffs {
  Signal f;
  Signal g;
  Signal h;
};

/// |y| at or beyond this magnitude is treated as finite-time escape.
inline constexpr double kBlowupThreshold = 1e12;

/// Node-aligned solution values. When blowup_index is set, values holds the
/// defined prefix (nodes 0 .. blowup_index-1) and the last stored value has
/// magnitude >= kBlowupThreshold; later nodes are undefined. Escape is data,
/// not an error: solutions may only exist on part of the grid.
struct Trajectory {
  Grid grid;
  std::vector<double> values;
  std::optional<int> blowup_index;

  int defined_size() const { return static_cast<int>(values.size()); }
};

/// Classical fixed-step RK4 for y' = -(f y^2 + g y + h) from y(t0) = y0.
/// Records a blow-up index instead of erroring when |y| crosses the
/// threshold. If a step itself overflows to a non-finite value the prefix
/// ends at the last finite node.
Trajectory solve_riccati(const RiccatiCoeffs& rc, double y0, const Grid& g);

/// Variation-of-constants solution of x' = drift * x + forcing, x(t0) = x0:
///   x(node(i)) = exp(D_i) * [x0 + trapezoid sum of exp(-D_j) forcing_j]
/// with D = cumulative(drift). Evaluated by quadrature, not by stepping.
Trajectory solve_linear_cauchy(const Signal& drift, const Signal& forcing,
                               double x0, const Grid& g);

/// Difference-quotient residual of a trajectory against an equation:
///   r_i = y'_i + f_i y_i^2 + g_i y_i + h_i
/// with central differences at interior nodes and second-order one-sided
/// differences at the ends. A trajectory satisfies the differential
/// inequality  y' + f y^2 + g y + h >= 0  numerically when every residual
/// is >= -slack (see riccati_residual_slack). In particular a true solution
/// has residuals within discretization error of zero, and when f >= 0 a
/// solution of the linear equation z' + g z + h = 0 has residual f z^2 >= 0.
std::vector<double> riccati_residual(const RiccatiCoeffs& rc,
                                     const Trajectory& traj);

/// Per-node tolerance 10 * step^2 * scale for residual checks, where scale
/// combines the local magnitudes of the residual's terms with the
/// trajectory's derivative range (the natural size of what the difference
/// quotient measures).
std::vector<double> riccati_residual_slack(const RiccatiCoeffs& rc,
                                           const Trajectory& traj);

/// residuals >= -slack at every defined node.
bool satisfies_riccati_inequality(const RiccatiCoeffs& rc,
                                  const Trajectory& traj);

/// Whether the comparison-criterion integrand multiplies the squared or the
/// plain difference of the quadratic coefficients. `squared` is the default
/// convention; both agree in sign whenever f1 == 0 and f2 >= 0.
enum class CoeffDifference { squared, linear };

/// Data for the comparison criterion between two Riccati equations:
/// y2 solves eq2; eta1 and eta2 satisfy the corresponding differential
/// inequalities; gamma is a candidate initial value for the dominating
/// solution. Requires y2(t0) <= eta1(t0), y2(t0) <= eta2(t0) and
/// gamma in [y2(t0), eta1(t0)].
struct ComparisonSetup {
  RiccatiCoeffs eq1;
  RiccatiCoeffs eq2;
  Trajectory y2;
  Trajectory eta1;
  Trajectory eta2;
  double gamma;
};

/// Outcome of the hypothesis check. condition_holds is exactly
/// "f1 nonnegative at every node AND min(integral_curve) >= -slack";
/// the eta feasibility flags are diagnostics and do not enter it.
/// first_violation carries (node, f1 value) when f1 dips negative, else
/// (node, curve value) for the first node where the integral curve fails.
struct HypothesisReport {
  bool f1_nonneg = false;
  std::vector<double> integral_curve;
  bool condition_holds = false;
  std::optional<std::pair<int, double>> first_violation;
  bool eta1_satisfies = false;
  bool eta2_satisfies = false;
};

/// Evaluate, at every node t of the common defined prefix,
///
///   gamma - y2(t0) + int_{t0}^{t} exp{ int_{t0}^{tau} [f1 (eta1 + eta2) + g1] }
///        * [ D(f2 - f1) y2^2 + (g2 - g1) y2 + (h2 - h1) ] dtau
///
/// where D is the squared or plain difference per `mode`. The criterion
/// holds when f1 >= 0 at every node and the curve never drops below the
/// relative slack. Throws ValidationError on setup invariant violations and
/// ArgumentError on grid mismatches.
HypothesisReport check_comparison_criterion(
    const ComparisonSetup& setup, const Grid& g,
    CoeffDifference mode = CoeffDifference::squared);

/// Output of build_comparison: the constructed quadratic coefficient, the
/// pair of equations it induces, and their explicit solutions.
struct ComparisonConstruction {
  /// quad_coeff(t) = v [y - u + F] / y^2 sampled on the grid, nonnegative
  /// under the problem hypotheses.
  Signal quad_coeff;
  /// (quad_coeff, -v, -v F): canonical form of y' + quad_coeff y^2 = v y + v F.
  RiccatiCoeffs riccati_eq;
  /// (0, -v, -v F): canonical form of x' = v x + v F.
  RiccatiCoeffs linear_eq;
  /// y_i = c + running integral of v u; solves riccati_eq by construction.
  Trajectory riccati_solution;
  /// Variation-of-constants solution of linear_eq.
  Trajectory linear_solution;
};

/// Assemble the Riccati/linear comparison pair for a bound problem and a
/// trajectory u satisfying its inequality. Validates the inequality within
/// relative slack, the positivity of the denominator c + int(v u), and the
/// nonnegativity (within slack) of the constructed quadratic coefficient.
ComparisonConstruction build_comparison(const BoundProblem& p, const Signal& u);

/// Result of the pointwise comparison y <= x.
struct ComparisonVerdict {
  bool holds = false;
  std::optional<int> first_violation;
  double max_gap = 0.0;  // max over nodes of y_i - x_i (negative: strictly below)
};

/// True iff y_i <= x_i + 1e-7 (1 + |x_i|) at every common defined node.
ComparisonVerdict verify_comparison(const Trajectory& y, const Trajectory& x);

}  // namespace gronwall

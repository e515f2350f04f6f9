#include "gronwall/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gronwall/detail/util.hpp"

namespace gronwall {

namespace {

/// Difference-quotient estimates of a trajectory's derivative: central at
/// interior nodes, second-order one-sided at the ends (first-order when only
/// two nodes are defined).
std::vector<double> derivative_estimates(const Trajectory& traj) {
  const auto& y = traj.values;
  const int m = traj.defined_size();
  const double h = traj.grid.step();
  std::vector<double> d(m);
  if (m == 2) {
    d[0] = d[1] = (y[1] - y[0]) / h;
    return d;
  }
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  for (int i = 1; i + 1 < m; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  d[m - 1] = (3.0 * y[m - 1] - 4.0 * y[m - 2] + y[m - 3]) / (2.0 * h);
  return d;
}

void check_trajectory(const Trajectory& traj) {
  const int m = traj.defined_size();
  if (m < 2)
    throw ArgumentError("trajectory needs at least 2 defined nodes, has " +
                        std::to_string(m));
  if (m > traj.grid.size())
    throw ArgumentError("trajectory holds more values than its grid has nodes");
}

}  // namespace

Trajectory solve_riccati(const RiccatiCoeffs& rc, double y0, const Grid& g) {
  if (!std::isfinite(y0))
    throw ArgumentError("initial value must be finite");
  Trajectory traj{g, {}, std::nullopt};
  traj.values.reserve(g.size());
  traj.values.push_back(y0);
  if (std::abs(y0) >= kBlowupThreshold) {
    traj.blowup_index = 1;
    return traj;
  }
  const double h = g.step();
  auto rhs = [&rc](double t, double y) {
    return -(rc.f(t) * y * y + rc.g(t) * y + rc.h(t));
  };
  for (int i = 0; i + 1 < g.size(); ++i) {
    const double t = g.node(i);
    const double y = traj.values.back();
    const double k1 = rhs(t, y);
    const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = rhs(t + h, y + h * k3);
    const double y_next = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(y_next)) {
      traj.blowup_index = i + 1;
      break;
    }
    traj.values.push_back(y_next);
    if (std::abs(y_next) >= kBlowupThreshold) {
      traj.blowup_index = i + 2;
      break;
    }
  }
  return traj;
}

Trajectory solve_linear_cauchy(const Signal& drift, const Signal& forcing,
                               double x0, const Grid& g) {
  if (!std::isfinite(x0))
    throw ArgumentError("initial value must be finite");
  const CumulativeIntegral D = cumulative(drift, g);
  const auto fo = detail::sample_checked(forcing, g, "forcing");
  const int n = g.size();
  const double h = g.step();
  std::vector<double> x(n);
  x[0] = x0;
  double acc = 0.0;
  double prev = std::exp(-D.values[0]) * fo[0];
  for (int i = 1; i < n; ++i) {
    const double cur = std::exp(-D.values[i]) * fo[i];
    acc += h * 0.5 * (prev + cur);
    prev = cur;
    x[i] = std::exp(D.values[i]) * (x0 + acc);
    if (!std::isfinite(x[i]))
      throw EvaluationError("variation-of-constants solution non-finite at node " +
                            std::to_string(i) + " (t = " + detail::num(g.node(i)) + ")");
  }
  return {g, std::move(x), std::nullopt};
}

std::vector<double> riccati_residual(const RiccatiCoeffs& rc,
                                     const Trajectory& traj) {
  check_trajectory(traj);
  const auto d = derivative_estimates(traj);
  const int m = traj.defined_size();
  std::vector<double> r(m);
  for (int i = 0; i < m; ++i) {
    const double t = traj.grid.node(i);
    const double y = traj.values[i];
    r[i] = d[i] + rc.f(t) * y * y + rc.g(t) * y + rc.h(t);
  }
  return r;
}

std::vector<double> riccati_residual_slack(const RiccatiCoeffs& rc,
                                           const Trajectory& traj) {
  check_trajectory(traj);
  const auto d = derivative_estimates(traj);
  const int m = traj.defined_size();
  double dmax = 0.0;
  for (int i = 0; i < m; ++i) dmax = std::max(dmax, std::abs(d[i]));
  const double h = traj.grid.step();
  std::vector<double> slack(m);
  for (int i = 0; i < m; ++i) {
    const double t = traj.grid.node(i);
    const double y = traj.values[i];
    const double scale = 1.0 + std::abs(rc.f(t)) * y * y +
                         std::abs(rc.g(t) * y) + std::abs(rc.h(t)) + dmax;
    slack[i] = 10.0 * h * h * scale;
  }
  return slack;
}

bool satisfies_riccati_inequality(const RiccatiCoeffs& rc,
                                  const Trajectory& traj) {
  const auto r = riccati_residual(rc, traj);
  const auto s = riccati_residual_slack(rc, traj);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] < -s[i]) return false;
  return true;
}

HypothesisReport check_comparison_criterion(const ComparisonSetup& setup,
                                            const Grid& g,
                                            CoeffDifference mode) {
  if (!(setup.y2.grid == g) || !(setup.eta1.grid == g) || !(setup.eta2.grid == g))
    throw ArgumentError("comparison setup: all trajectories must share the grid");
  const int m = std::min({setup.y2.defined_size(), setup.eta1.defined_size(),
                          setup.eta2.defined_size()});
  if (m < 2)
    throw ArgumentError("comparison setup: trajectories too short");

  const double y2_0 = setup.y2.values[0];
  if (!(y2_0 <= setup.eta1.values[0]) || !(y2_0 <= setup.eta2.values[0]))
    throw ValidationError(
        "comparison setup: y2(t0) = " + detail::num(y2_0) +
        " must not exceed eta1(t0) = " + detail::num(setup.eta1.values[0]) +
        " or eta2(t0) = " + detail::num(setup.eta2.values[0]));
  if (!(setup.gamma >= y2_0 && setup.gamma <= setup.eta1.values[0]))
    throw ValidationError("comparison setup: gamma = " + detail::num(setup.gamma) +
                          " outside [y2(t0), eta1(t0)] = [" + detail::num(y2_0) +
                          ", " + detail::num(setup.eta1.values[0]) + "]");

  HypothesisReport report;
  report.eta1_satisfies = satisfies_riccati_inequality(setup.eq1, setup.eta1);
  report.eta2_satisfies = satisfies_riccati_inequality(setup.eq2, setup.eta2);

  const double h = g.step();
  report.integral_curve.resize(m);

  // Inner exponent: running integral of f1 (eta1 + eta2) + g1.
  std::vector<double> inner(m);
  auto phi = [&](int j) {
    const double t = g.node(j);
    return setup.eq1.f(t) * (setup.eta1.values[j] + setup.eta2.values[j]) +
           setup.eq1.g(t);
  };
  inner[0] = 0.0;
  double phi_prev = phi(0);
  for (int j = 1; j < m; ++j) {
    const double phi_cur = phi(j);
    inner[j] = inner[j - 1] + h * 0.5 * (phi_prev + phi_cur);
    phi_prev = phi_cur;
  }

  bool f1_ok = true;
  std::optional<std::pair<int, double>> f1_violation;
  auto psi = [&](int j) {
    const double t = g.node(j);
    const double f1 = setup.eq1.f(t);
    if (f1 < 0.0 && !f1_violation) f1_violation = {j, f1};
    const double df = setup.eq2.f(t) - f1;
    const double dcoef = mode == CoeffDifference::squared ? df * df : df;
    const double y2 = setup.y2.values[j];
    return std::exp(inner[j]) *
           (dcoef * y2 * y2 + (setup.eq2.g(t) - setup.eq1.g(t)) * y2 +
            (setup.eq2.h(t) - setup.eq1.h(t)));
  };

  report.integral_curve[0] = setup.gamma - y2_0;
  double psi_prev = psi(0);
  for (int j = 1; j < m; ++j) {
    const double psi_cur = psi(j);
    report.integral_curve[j] =
        report.integral_curve[j - 1] + h * 0.5 * (psi_prev + psi_cur);
    psi_prev = psi_cur;
  }
  f1_ok = !f1_violation.has_value();
  report.f1_nonneg = f1_ok;

  bool curve_ok = true;
  std::optional<std::pair<int, double>> curve_violation;
  for (int j = 0; j < m; ++j) {
    const double e = report.integral_curve[j];
    if (e < -detail::rel_slack(e)) {
      curve_ok = false;
      curve_violation = {j, e};
      break;
    }
  }
  report.condition_holds = f1_ok && curve_ok;
  report.first_violation = !f1_ok ? f1_violation : curve_violation;
  return report;
}

ComparisonConstruction build_comparison(const BoundProblem& p, const Signal& u) {
  validate(p);
  const Grid& g = p.grid;
  const int n = g.size();
  const auto us = detail::sample_checked(u, g, "trajectory u");
  const auto vs = detail::sample_checked(p.v, g, "rate signal v");
  const CumulativeIntegral F = cumulative(p.f, g);

  // Running integral of v * u, the explicit solution of the constructed
  // Riccati equation.
  std::vector<double> y(n);
  y[0] = p.c;
  double prev = vs[0] * us[0];
  for (int i = 1; i < n; ++i) {
    const double cur = vs[i] * us[i];
    y[i] = y[i - 1] + g.step() * 0.5 * (prev + cur);
    prev = cur;
  }

  std::vector<double> quad(n);
  for (int i = 0; i < n; ++i) {
    const double rhs = y[i] + F.values[i];
    if (us[i] > rhs + detail::rel_slack(rhs))
      throw ValidationError(
          "u does not satisfy the bound inequality: u = " + detail::num(us[i]) +
          " > c + int(v u) + int(f) = " + detail::num(rhs) + " at node " +
          std::to_string(i) + " (t = " + detail::num(g.node(i)) + ")");
    if (!(y[i] > 0.0))
      throw ValidationError("denominator c + int(v u) = " + detail::num(y[i]) +
                            " is not positive at node " + std::to_string(i) +
                            " (t = " + detail::num(g.node(i)) + ")");
    quad[i] = vs[i] * (y[i] - us[i] + F.values[i]) / (y[i] * y[i]);
    // Nonnegative in exact arithmetic; allow quadrature noise scaled by the
    // same ingredients that formed the quotient.
    const double quad_scale =
        detail::rel_slack(0.0) +
        1e-7 * vs[i] * (1.0 + std::abs(y[i]) + std::abs(us[i]) + std::abs(F.values[i])) /
            (y[i] * y[i]);
    if (quad[i] < -quad_scale)
      throw ValidationError("constructed quadratic coefficient is negative: " +
                            detail::num(quad[i]) + " at node " + std::to_string(i) +
                            " (t = " + detail::num(g.node(i)) + ")");
  }

  std::vector<double> neg_v(n), neg_vF(n);
  for (int i = 0; i < n; ++i) {
    neg_v[i] = -vs[i];
    neg_vF[i] = -vs[i] * F.values[i];
  }

  ComparisonConstruction out{
      Signal::from_samples(g, quad),
      RiccatiCoeffs{Signal::from_samples(g, quad), Signal::from_samples(g, neg_v),
                    Signal::from_samples(g, neg_vF)},
      RiccatiCoeffs{Signal::constant(0.0), Signal::from_samples(g, neg_v),
                    Signal::from_samples(g, neg_vF)},
      Trajectory{g, std::move(y), std::nullopt},
      Trajectory{g, {}, std::nullopt}};

  std::vector<double> vF(n);
  for (int i = 0; i < n; ++i) vF[i] = vs[i] * F.values[i];
  out.linear_solution = solve_linear_cauchy(Signal::from_samples(g, vs),
                                            Signal::from_samples(g, vF), p.c, g);
  return out;
}

ComparisonVerdict verify_comparison(const Trajectory& y, const Trajectory& x) {
  if (!(y.grid == x.grid))
    throw ArgumentError("verify_comparison: trajectories on different grids");
  const int m = std::min(y.defined_size(), x.defined_size());
  if (m < 1) throw ArgumentError("verify_comparison: empty trajectories");
  ComparisonVerdict verdict{true, std::nullopt,
                            -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < m; ++i) {
    const double gap = y.values[i] - x.values[i];
    verdict.max_gap = std::max(verdict.max_gap, gap);
    if (gap > detail::rel_slack(x.values[i]) && !verdict.first_violation) {
      verdict.holds = false;
      verdict.first_violation = i;
    }
  }
  return verdict;
}

}  // namespace gronwall

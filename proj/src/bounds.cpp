#include "gronwall/bounds.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gronwall/detail/util.hpp"

namespace gronwall {

namespace {

void check_constant(double c) {
  if (!(c >= 0.0))
    throw ValidationError("initial constant c must be nonnegative, got c = " +
                          detail::num(c));
}

void check_nonnegative(const std::vector<double>& vals, const Grid& g,
                       const char* name) {
  for (int i = 0; i < g.size(); ++i) {
    if (vals[i] < 0.0)
      throw ValidationError(std::string(name) +
                            " must be nonnegative: value " +
                            detail::num(vals[i]) + " at node " +
                            std::to_string(i) + " (t = " +
                            detail::num(g.node(i)) + ")");
  }
}

void check_forcing_integral(const Signal& f, const Grid& g) {
  const CumulativeIntegral F = cumulative(f, g);
  for (int i = 0; i < g.size(); ++i) {
    if (F.values[i] < 0.0)
      throw ValidationError(
          "running integral of the forcing f must stay nonnegative: value " +
          detail::num(F.values[i]) + " at node " + std::to_string(i) +
          " (t = " + detail::num(g.node(i)) + ")");
  }
}

}  // namespace

void validate(const BoundProblem& p) {
  check_constant(p.c);
  const auto vs = detail::sample_checked(p.v, p.grid, "rate signal v");
  check_nonnegative(vs, p.grid, "rate signal v");
  check_forcing_integral(p.f, p.grid);
}

std::vector<double> classic_bound(const BoundProblem& p) {
  check_constant(p.c);
  auto vs = detail::sample_checked(p.v, p.grid, "rate signal v");
  check_nonnegative(vs, p.grid, "rate signal v");
  const CumulativeIntegral V =
      cumulative(Signal::from_samples(p.grid, std::move(vs)), p.grid);
  std::vector<double> b(p.grid.size());
  for (int i = 0; i < p.grid.size(); ++i) b[i] = p.c * std::exp(V.values[i]);
  return b;
}

std::vector<double> general_bound(const BoundProblem& p) {
  check_constant(p.c);
  auto vs = detail::sample_checked(p.v, p.grid, "rate signal v");
  check_nonnegative(vs, p.grid, "rate signal v");
  const Signal fs = p.f.sampled_on(p.grid) ? p.f : Signal::sample_onto(p.f, p.grid);
  check_forcing_integral(fs, p.grid);
  const CumulativeIntegral V =
      cumulative(Signal::from_samples(p.grid, std::move(vs)), p.grid);
  std::vector<double> b(p.grid.size());
  for (int i = 0; i < p.grid.size(); ++i)
    b[i] = p.c * std::exp(V.values[i]) + weighted_tail_integral(V, fs, p.grid, i);
  return b;
}

Envelope two_sided_envelope(double u0, const Signal& v, const Signal& f,
                            const Grid& grid) {
  if (!(u0 >= 0.0))
    throw ValidationError("initial value u0 must be nonnegative, got u0 = " +
                          detail::num(u0));
  auto vs = detail::sample_checked(v, grid, "rate signal v");
  check_nonnegative(vs, grid, "rate signal v");
  const auto fs = detail::sample_checked(f, grid, "forcing signal f");
  check_nonnegative(fs, grid, "forcing signal f");

  const int n = grid.size();
  const double h = grid.step();
  const CumulativeIntegral V =
      cumulative(Signal::from_samples(grid, std::move(vs)), grid);

  // Both tail sums factor through exp(+-V_i): accumulate the trapezoid sums
  // of exp(-V_j) f_j and exp(+V_j) f_j once, then scale per node. The f_j == 0
  // guard keeps 0 * inf out of the accumulation for extreme rate inputs.
  Envelope env{grid, std::vector<double>(n), std::vector<double>(n)};
  double acc_dec = 0.0;  // trapezoid sum of exp(-V_j) f_j
  double acc_inc = 0.0;  // trapezoid sum of exp(+V_j) f_j
  double prev_dec = fs[0] == 0.0 ? 0.0 : std::exp(-V.values[0]) * fs[0];
  double prev_inc = fs[0] == 0.0 ? 0.0 : std::exp(V.values[0]) * fs[0];
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      const double cur_dec = fs[i] == 0.0 ? 0.0 : std::exp(-V.values[i]) * fs[i];
      const double cur_inc = fs[i] == 0.0 ? 0.0 : std::exp(V.values[i]) * fs[i];
      acc_dec += h * 0.5 * (prev_dec + cur_dec);
      acc_inc += h * 0.5 * (prev_inc + cur_inc);
      prev_dec = cur_dec;
      prev_inc = cur_inc;
    }
    const double grow = std::exp(V.values[i]);
    const double shrink = std::exp(-V.values[i]);
    env.upper[i] = u0 * grow + grow * acc_dec;
    env.lower[i] = u0 * shrink - shrink * acc_inc;
  }
  return env;
}

}  // namespace gronwall

#include "gronwall/quadrature.hpp"

#include <cmath>
#include <string>

#include "gronwall/detail/util.hpp"

namespace gronwall {

CumulativeIntegral cumulative(const Signal& s, const Grid& g) {
  std::vector<double> values(g.size());
  values[0] = 0.0;
  double prev = s(g.node(0));
  if (!std::isfinite(prev))
    throw EvaluationError("integrand is not finite at node 0 (t = " +
                          detail::num(g.node(0)) + ")");
  for (int i = 1; i < g.size(); ++i) {
    const double cur = s(g.node(i));
    if (!std::isfinite(cur))
      throw EvaluationError("integrand is not finite at node " +
                            std::to_string(i) + " (t = " +
                            detail::num(g.node(i)) + ")");
    values[i] = values[i - 1] + g.step() * 0.5 * (prev + cur);
    prev = cur;
  }
  return {g, std::move(values)};
}

double weighted_tail_integral(const CumulativeIntegral& w, const Signal& s,
                              const Grid& g, int t_index) {
  if (!(w.grid == g))
    throw ArgumentError("weighted_tail_integral: weight built on a different grid");
  if (t_index < 0 || t_index >= g.size())
    throw ArgumentError("weighted_tail_integral: t_index " +
                        std::to_string(t_index) + " out of range [0, " +
                        std::to_string(g.size() - 1) + "]");
  if (t_index == 0) return 0.0;
  const double wt = w.values[t_index];
  double acc = 0.0;
  double prev = std::exp(wt - w.values[0]) * s(g.node(0));
  for (int i = 1; i <= t_index; ++i) {
    const double cur = std::exp(wt - w.values[i]) * s(g.node(i));
    acc += g.step() * 0.5 * (prev + cur);
    prev = cur;
  }
  return acc;
}

}  // namespace gronwall

#include "gronwall/signal.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gronwall {

Grid::Grid(double t0, double t1, int n) : t0_(t0), t1_(t1), n_(n) {
  if (!std::isfinite(t0) || !std::isfinite(t1))
    throw ArgumentError("grid endpoints must be finite");
  if (!(t1 > t0)) throw ArgumentError("grid requires t1 > t0");
  if (n < 2) throw ArgumentError("grid requires at least 2 nodes");
  step_ = (t1 - t0) / (n - 1);
}

Signal Signal::constant(double value) {
  Signal s;
  s.fn_ = [value](double) { return value; };
  return s;
}

Signal Signal::from_function(std::function<double(double)> fn) {
  if (!fn) throw ArgumentError("signal evaluator must be callable");
  Signal s;
  s.fn_ = std::move(fn);
  return s;
}

Signal Signal::from_samples(Grid grid, std::vector<double> values) {
  if (static_cast<int>(values.size()) != grid.size())
    throw ArgumentError("sample count does not match grid size");
  Signal s;
  s.grid_ = grid;
  s.samples_ = std::move(values);
  return s;
}

Signal Signal::sample_onto(const Signal& s, const Grid& g) {
  std::vector<double> vals(g.size());
  for (int i = 0; i < g.size(); ++i) vals[i] = s(g.node(i));
  return from_samples(g, std::move(vals));
}

double Signal::operator()(double t) const {
  if (fn_) return fn_(t);
  const Grid& g = *grid_;
  if (t <= g.t0()) return samples_.front();
  if (t >= g.t1()) return samples_.back();
  const double rel = (t - g.t0()) / g.step();
  const int k = static_cast<int>(std::llround(rel));
  if (t == g.node(k)) return samples_[k];  // exact at own nodes
  const int i = std::clamp(static_cast<int>(std::floor(rel)), 0, g.size() - 2);
  const double theta = std::clamp((t - g.node(i)) / g.step(), 0.0, 1.0);
  return samples_[i] + theta * (samples_[i + 1] - samples_[i]);
}

}  // namespace gronwall

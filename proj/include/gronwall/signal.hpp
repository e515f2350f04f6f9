#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gronwall/errors.hpp"

namespace gronwall {

/// Uniform time grid with n nodes on [t0, t1]; node(i) = t0 + i * step.
class Grid {
 public:
  Grid(double t0, double t1, int n);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  int size() const { return n_; }
  double step() const { return step_; }
  double node(int i) const { return t0_ + i * step_; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.t0_ == b.t0_ && a.t1_ == b.t1_ && a.n_ == b.n_;
  }

 private:
  double t0_;
  double t1_;
  int n_;
  double step_;
};

/// Real-valued function of time: either a closed-form evaluator or a sample
/// vector aligned to a grid, with linear interpolation between nodes and
/// clamping outside [t0, t1]. A sampled signal reproduces its own node
/// values exactly.
class Signal {
 public:
  static Signal constant(double value);
  static Signal from_function(std::function<double(double)> fn);
  static Signal from_samples(Grid grid, std::vector<double> values);

  /// Evaluate `s` at every node of `g` and wrap the result as a sampled
  /// signal on `g`.
  static Signal sample_onto(const Signal& s, const Grid& g);

  double operator()(double t) const;

  bool is_sampled() const { return grid_.has_value(); }
  bool sampled_on(const Grid& g) const { return grid_ && *grid_ == g; }
  const std::vector<double>& samples() const { return samples_; }

 private:
  Signal() = default;
  std::function<double(double)> fn_;
  std::optional<Grid> grid_;
  std::vector<double> samples_;
};

}  // namespace gronwall

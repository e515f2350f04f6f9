#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gronwall/bounds.hpp"
#include "gronwall/linsys.hpp"
#include "gronwall/riccati.hpp"

namespace gronwall {

/// SplitMix64 in its reference form, pinned so every seeded suite reproduces
/// bit-for-bit across platforms and languages. Increment 0x9E3779B97F4A7C15;
/// mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30/27/31.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

/// Stream for instance `index` of a seeded family. The (seed, index) pair is
/// scrambled through one SplitMix64 round so streams of adjacent indices do
/// not overlap; generation is order-independent and parallelizable.
SplitMix64 instance_rng(std::uint64_t seed, int index);

/// a0 + sum_{k=1..d} (c_k cos(k t) + s_k sin(k t)).
struct TrigPoly {
  double a0 = 0.0;
  std::vector<double> cos_coef;
  std::vector<double> sin_coef;

  double operator()(double t) const;
};

/// Coefficients drawn uniformly from [-amplitude, amplitude], in the fixed
/// order a0, (c_1, s_1), ..., (c_degree, s_degree).
TrigPoly random_trig_poly(SplitMix64& rng, int degree, double amplitude = 1.0);

struct RandomInstanceSpec {
  std::uint64_t seed = 0;
  int count = 0;
  std::pair<double, double> c_range{0.0, 1.0};
  int coefficient_degree = 2;
  double horizon = 1.0;
  int n = 101;
};

/// Trajectory of u' = v u + f, u(t0) = c, solved by RK4 on a grid with 4x the
/// node density of p.grid and downsampled back. This trajectory turns the
/// bound inequality into an equality, which makes it the tightness reference
/// for general_bound: the bound curve and this trajectory agree up to
/// quadrature error.
Trajectory equality_case(const BoundProblem& p);

/// Deterministic family of valid bound problems on [0, horizon]: per
/// instance, c ~ U(c_range), then v = |trig poly|, then f = |trig poly|
/// (coefficients U[-1, 1]). Same seed gives bitwise-identical instances.
std::vector<BoundProblem> generate_instances(const RandomInstanceSpec& spec);

/// Smooth variant for difference-quotient residual suites: v and f are
/// squared trig polynomials (kink-free, nonnegative). Draw order: c, v poly,
/// f poly.
BoundProblem smooth_instance(SplitMix64& rng, std::pair<double, double> c_range,
                             int degree, const Grid& grid,
                             double v_amplitude = 0.25, double f_amplitude = 0.35);

/// Random linear system with trig-poly entries (row-major draw order for A,
/// then g entries, then y0 components in [-1, 1]).
LinearSystem random_linear_system(std::uint64_t seed, int index, int dim,
                                  const Grid& grid, int degree = 2,
                                  double amplitude = 0.8);

}  // namespace gronwall

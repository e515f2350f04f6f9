#include "gronwall/oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gronwall/detail/util.hpp"

namespace gronwall {

SplitMix64 instance_rng(std::uint64_t seed, int index) {
  SplitMix64 scrambler{seed + 0x9E3779B97F4A7C15ull *
                                  static_cast<std::uint64_t>(index + 1)};
  return SplitMix64{scrambler.next()};
}

double TrigPoly::operator()(double t) const {
  double s = a0;
  for (size_t k = 0; k < cos_coef.size(); ++k) {
    const double w = static_cast<double>(k + 1) * t;
    s += cos_coef[k] * std::cos(w) + sin_coef[k] * std::sin(w);
  }
  return s;
}

TrigPoly random_trig_poly(SplitMix64& rng, int degree, double amplitude) {
  if (degree < 0) throw ArgumentError("trig poly degree must be nonnegative");
  TrigPoly p;
  p.a0 = rng.uniform(-amplitude, amplitude);
  p.cos_coef.resize(degree);
  p.sin_coef.resize(degree);
  for (int k = 0; k < degree; ++k) {
    p.cos_coef[k] = rng.uniform(-amplitude, amplitude);
    p.sin_coef[k] = rng.uniform(-amplitude, amplitude);
  }
  return p;
}

Trajectory equality_case(const BoundProblem& p) {
  validate(p);
  const Grid& coarse = p.grid;
  const Grid fine(coarse.t0(), coarse.t1(), 4 * (coarse.size() - 1) + 1);
  const double h = fine.step();
  auto rhs = [&p](double t, double u) { return p.v(t) * u + p.f(t); };

  std::vector<double> values(coarse.size());
  values[0] = p.c;
  double u = p.c;
  for (int i = 0; i + 1 < fine.size(); ++i) {
    const double t = fine.node(i);
    const double k1 = rhs(t, u);
    const double k2 = rhs(t + 0.5 * h, u + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, u + 0.5 * h * k2);
    const double k4 = rhs(t + h, u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(u))
      throw EvaluationError("equality-case trajectory non-finite at t = " +
                            detail::num(fine.node(i + 1)));
    if ((i + 1) % 4 == 0) values[(i + 1) / 4] = u;
  }
  return {coarse, std::move(values), std::nullopt};
}

std::vector<BoundProblem> generate_instances(const RandomInstanceSpec& spec) {
  if (spec.count < 0) throw ArgumentError("instance count must be nonnegative");
  if (!(spec.c_range.first <= spec.c_range.second))
    throw ArgumentError("instance c range is empty");
  if (!(spec.c_range.first >= 0.0))
    throw ArgumentError("instance c range must be nonnegative");
  if (spec.coefficient_degree < 0)
    throw ArgumentError("coefficient degree must be nonnegative");
  const Grid grid(0.0, spec.horizon, spec.n);

  std::vector<BoundProblem> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    SplitMix64 rng = instance_rng(spec.seed, i);
    const double c = rng.uniform(spec.c_range.first, spec.c_range.second);
    const TrigPoly pv = random_trig_poly(rng, spec.coefficient_degree);
    const TrigPoly pf = random_trig_poly(rng, spec.coefficient_degree);
    out.push_back(BoundProblem{
        c,
        Signal::from_function([pv](double t) { return std::abs(pv(t)); }),
        Signal::from_function([pf](double t) { return std::abs(pf(t)); }),
        grid});
  }
  return out;
}

BoundProblem smooth_instance(SplitMix64& rng, std::pair<double, double> c_range,
                             int degree, const Grid& grid, double v_amplitude,
                             double f_amplitude) {
  const double c = rng.uniform(c_range.first, c_range.second);
  const TrigPoly pv = random_trig_poly(rng, degree, v_amplitude);
  const TrigPoly pf = random_trig_poly(rng, degree, f_amplitude);
  return BoundProblem{
      c,
      Signal::from_function([pv](double t) { const double x = pv(t); return x * x; }),
      Signal::from_function([pf](double t) { const double x = pf(t); return x * x; }),
      grid};
}

LinearSystem random_linear_system(std::uint64_t seed, int index, int dim,
                                  const Grid& grid, int degree,
                                  double amplitude) {
  if (dim < 1) throw ArgumentError("system dimension must be positive");
  SplitMix64 rng = instance_rng(seed, index);

  std::vector<TrigPoly> entries;
  entries.reserve(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim * dim; ++i)
    entries.push_back(random_trig_poly(rng, degree, amplitude));
  std::vector<TrigPoly> forcing;
  forcing.reserve(dim);
  for (int i = 0; i < dim; ++i)
    forcing.push_back(random_trig_poly(rng, degree, amplitude));
  std::vector<double> y0(dim);
  for (int i = 0; i < dim; ++i) y0[i] = rng.uniform(-1.0, 1.0);

  MatrixSignal a_sig = [dim, entries](double t) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = entries[static_cast<size_t>(i) * dim + j](t);
    return m;
  };
  VectorSignal g_sig = [dim, forcing](double t) {
    std::vector<double> g(dim);
    for (int i = 0; i < dim; ++i) g[i] = forcing[i](t);
    return g;
  };
  return LinearSystem{dim, std::move(a_sig), std::move(g_sig), std::move(y0), grid};
}

}  // namespace gronwall

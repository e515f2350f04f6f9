#include "gronwall/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gronwall/detail/util.hpp"

namespace gronwall {

namespace {

void check_matrix(const Matrix& m) {
  if (m.dim < 1 || m.a.size() != static_cast<size_t>(m.dim) * m.dim)
    throw ArgumentError("matrix storage inconsistent with its dimension");
  for (double x : m.a)
    if (!std::isfinite(x)) throw ArgumentError("matrix has non-finite entries");
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
  std::vector<double> y(m.dim, 0.0);
  for (int i = 0; i < m.dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.dim; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace

double euclidean_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (double x : m.a) s += x * x;
  return std::sqrt(s);
}

OperatorNorm operator_norm(const Matrix& m) {
  check_matrix(m);
  const double fro = frobenius_norm(m);
  if (fro == 0.0) return {0.0, false};

  // Gram matrix M^T M; its largest eigenvalue is the squared spectral norm.
  const int d = m.dim;
  Matrix gram(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += m(k, i) * m(k, j);
      gram(i, j) = s;
    }

  // Deterministic start vector with unequal entries so it is unlikely to be
  // orthogonal to the dominant eigenvector.
  std::vector<double> q(d);
  for (int i = 0; i < d; ++i) q[i] = 1.0 + 0.01 * i;
  double qn = euclidean_norm(q);
  for (double& x : q) x /= qn;

  double lambda_prev = -1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const std::vector<double> w = matvec(gram, q);
    double lambda = 0.0;
    for (int i = 0; i < d; ++i) lambda += q[i] * w[i];  // Rayleigh quotient
    const double wn = euclidean_norm(w);
    if (wn <= 1e-30 * fro * fro) break;  // start vector in the null space
    for (int i = 0; i < d; ++i) q[i] = w[i] / wn;
    if (iter > 0 && std::abs(lambda - lambda_prev) <= 1e-10 * std::abs(lambda))
      return {std::sqrt(std::max(lambda, 0.0)), false};
    lambda_prev = lambda;
  }
  return {fro, true};
}

std::vector<std::vector<double>> integrate_system(const LinearSystem& sys) {
  if (sys.dim < 1) throw ArgumentError("system dimension must be positive");
  if (static_cast<int>(sys.y0.size()) != sys.dim)
    throw ArgumentError("initial state size does not match system dimension");
  if (!sys.A || !sys.g) throw ArgumentError("system signals must be callable");

  const int d = sys.dim;
  auto rhs = [&](double t, const std::vector<double>& y) {
    const Matrix a = sys.A(t);
    if (a.dim != d) throw ArgumentError("matrix signal returned wrong dimension");
    std::vector<double> g = sys.g(t);
    if (static_cast<int>(g.size()) != d)
      throw ArgumentError("vector signal returned wrong dimension");
    std::vector<double> out = matvec(a, y);
    for (int i = 0; i < d; ++i) out[i] += g[i];
    return out;
  };

  const Grid& grid = sys.grid;
  const double h = grid.step();
  std::vector<std::vector<double>> states(grid.size());
  states[0] = sys.y0;
  for (int i = 0; i + 1 < grid.size(); ++i) {
    const double t = grid.node(i);
    const auto& y = states[i];
    const auto k1 = rhs(t, y);
    std::vector<double> tmp(d);
    for (int j = 0; j < d; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    const auto k2 = rhs(t + 0.5 * h, tmp);
    for (int j = 0; j < d; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    const auto k3 = rhs(t + 0.5 * h, tmp);
    for (int j = 0; j < d; ++j) tmp[j] = y[j] + h * k3[j];
    const auto k4 = rhs(t + h, tmp);
    std::vector<double> next(d);
    for (int j = 0; j < d; ++j) {
      next[j] = y[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      if (!std::isfinite(next[j]))
        throw EvaluationError("state non-finite at node " + std::to_string(i + 1) +
                              " (t = " + detail::num(grid.node(i + 1)) + ")");
    }
    states[i + 1] = std::move(next);
  }
  return states;
}

NormEnvelopeReport norm_envelope(const LinearSystem& sys, MatrixNormKind norm_kind) {
  const Grid& grid = sys.grid;
  const int n = grid.size();

  std::vector<double> vsamp(n), fsamp(n);
  int fallbacks = 0;
  for (int i = 0; i < n; ++i) {
    const Matrix a = sys.A(grid.node(i));
    if (norm_kind == MatrixNormKind::spectral) {
      const OperatorNorm on = operator_norm(a);
      vsamp[i] = on.value;
      fallbacks += on.frobenius_fallback ? 1 : 0;
    } else {
      check_matrix(a);
      vsamp[i] = frobenius_norm(a);
    }
    fsamp[i] = euclidean_norm(sys.g(grid.node(i)));
  }

  NormEnvelopeReport report{
      two_sided_envelope(euclidean_norm(sys.y0),
                         Signal::from_samples(grid, std::move(vsamp)),
                         Signal::from_samples(grid, std::move(fsamp)), grid),
      {}, true, -std::numeric_limits<double>::infinity(),
      -std::numeric_limits<double>::infinity(), fallbacks};

  const auto states = integrate_system(sys);
  report.actual_norm.resize(n);
  for (int i = 0; i < n; ++i) report.actual_norm[i] = euclidean_norm(states[i]);

  for (int i = 0; i < n; ++i) {
    const double lo = report.envelope.lower[i];
    const double hi = report.envelope.upper[i];
    const double a = report.actual_norm[i];
    const double slack =
        detail::rel_slack(std::max({std::abs(a), std::abs(lo), std::abs(hi)}));
    if (a < lo - slack || a > hi + slack) report.contained = false;
    report.max_upper_gap = std::max(report.max_upper_gap, hi - a);
    report.max_lower_gap = std::max(report.max_lower_gap, a - lo);
  }
  return report;
}

}  // namespace gronwall

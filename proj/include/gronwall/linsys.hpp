#pragma once

#include <functional>
#include <vector>

#include "gronwall/bounds.hpp"
#include "gronwall/signal.hpp"

namespace gronwall {

/// Small dense square matrix, row-major.
struct Matrix {
  int dim = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int d) : dim(d), a(static_cast<size_t>(d) * d, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

  static Matrix identity(int d) {
    Matrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
};

using MatrixSignal = std::function<Matrix(double)>;
using VectorSignal = std::function<std::vector<double>(double)>;

/// Time-varying linear system Y' = A(t) Y + g(t), Y(t0) = y0, on a grid.
struct LinearSystem {
  int dim;
  MatrixSignal A;
  VectorSignal g;
  std::vector<double> y0;
  Grid grid;
};

struct OperatorNorm {
  double value = 0.0;
  /// Set when power iteration failed to converge and the Frobenius norm
  /// (always an upper bound on the spectral norm) was reported instead.
  bool frobenius_fallback = false;
};

/// Largest singular value, computed by power iteration on M^T M (at most 200
/// iterations, relative convergence 1e-10 on the Rayleigh quotient).
OperatorNorm operator_norm(const Matrix& m);

double frobenius_norm(const Matrix& m);

/// Euclidean length of a vector.
double euclidean_norm(const std::vector<double>& v);

/// Fixed-step RK4 trajectory of the system; one state vector per grid node.
/// Throws EvaluationError naming the node if the state goes non-finite.
std::vector<std::vector<double>> integrate_system(const LinearSystem& sys);

/// Which matrix norm feeds the rate signal of the envelope.
enum class MatrixNormKind { spectral, frobenius };

/// Envelope check for the norm of a linear system's solution.
struct NormEnvelopeReport {
  Envelope envelope;
  std::vector<double> actual_norm;
  /// lower_i - slack <= actual_i <= upper_i + slack at every node, with
  /// slack = 1e-7 * (1 + local magnitude).
  bool contained = false;
  double max_upper_gap = 0.0;  // max over nodes of upper_i - actual_i
  double max_lower_gap = 0.0;  // max over nodes of actual_i - lower_i
  int fallback_count = 0;      // nodes where the Frobenius fallback fired
};

/// Build the two-sided envelope with u0 = |Y(t0)|, rate v(t) = |A(t)| and
/// forcing f(t) = |g(t)| (Euclidean norms), integrate the system, and check
/// containment of the actual solution norm.
NormEnvelopeReport norm_envelope(const LinearSystem& sys,
                                 MatrixNormKind norm_kind = MatrixNormKind::spectral);

}  // namespace gronwall

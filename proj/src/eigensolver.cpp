#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/matrix.hpp"
#include "subdiv/spectral.hpp"

namespace subdiv {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += row[j] * row[j];
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p,q); both triangles of `a` and the
// columns p,q of `v` are updated.
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);

  double t;
  const double theta = (aqq - app) / (2.0 * apq);
  if (std::fabs(theta) > 1e153) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  const double h = t * apq;

  a(p, p) = app - h;
  a(q, q) = aqq + h;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t j = 0; j < n; ++j) {
    if (j == p || j == q) continue;
    const double ajp = a(j, p);
    const double ajq = a(j, q);
    const double np = ajp - s * (ajq + tau * ajp);
    const double nq = ajq + s * (ajp - tau * ajq);
    a(j, p) = np;
    a(p, j) = np;
    a(j, q) = nq;
    a(q, j) = nq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double vjp = v(j, p);
    const double vjq = v(j, q);
    v(j, p) = vjp - s * (vjq + tau * vjp);
    v(j, q) = vjq + s * (vjp - tau * vjq);
  }
}

void apply_sign_convention(DenseMatrix& vectors, std::size_t column) {
  const std::size_t n = vectors.rows();
  std::size_t best = 0;
  double best_abs = std::fabs(vectors(0, column));
  for (std::size_t i = 1; i < n; ++i) {
    const double a = std::fabs(vectors(i, column));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (vectors(best, column) < 0.0) {
    for (std::size_t i = 0; i < n; ++i) vectors(i, column) = -vectors(i, column);
  }
}

}  // namespace

Spectrum eigendecompose(const DenseMatrix& matrix, double tolerance) {
  const std::size_t n = matrix.rows();
  if (n == 0 || matrix.cols() != n) fail(errc::invalid_argument, "matrix must be square and non-empty");
  const double scale = std::max(1.0, matrix.max_abs());
  if (matrix.asymmetry() > tolerance * scale)
    fail(errc::not_symmetric, "asymmetry " + std::to_string(matrix.asymmetry()));

  DenseMatrix a = matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  DenseMatrix v = DenseMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_frobenius(a) <= tolerance) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;

    double abs_sum = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) abs_sum += std::fabs(a(p, q));
    const double thresh = (sweep < 3) ? 0.2 * abs_sum / (static_cast<double>(n) * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::fabs(a(p, q));
        const double tiny = 100.0 * apq;
        if (sweep > 4 && std::fabs(a(p, p)) + tiny == std::fabs(a(p, p)) &&
            std::fabs(a(q, q)) + tiny == std::fabs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
        } else if (apq > thresh && apq > 0.0) {
          rotate(a, v, p, q);
        }
      }
    }
  }
  if (!converged)
    fail(errc::no_convergence, "Jacobi sweeps exhausted; off-diagonal norm " +
                                   std::to_string(off_diagonal_frobenius(a)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  Spectrum spec;
  spec.tolerance = tolerance;
  spec.eigenvalues.resize(n);
  spec.eigenvectors = DenseMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    spec.eigenvalues[col] = a(src, src);
    for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, col) = v(i, src);
    apply_sign_convention(spec.eigenvectors, col);
  }
  return spec;
}

}  // namespace subdiv

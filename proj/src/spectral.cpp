#include "subdiv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

// Modified Gram-Schmidt over a contiguous block of columns.
void orthonormalize_block(DenseMatrix& vectors, std::size_t first, std::size_t last) {
  const std::size_t n = vectors.rows();
  for (std::size_t c = first; c < last; ++c) {
    for (std::size_t prev = first; prev < c; ++prev) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += vectors(i, prev) * vectors(i, c);
      for (std::size_t i = 0; i < n; ++i) vectors(i, c) -= dot * vectors(i, prev);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += vectors(i, c) * vectors(i, c);
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) vectors(i, c) *= inv;
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

DenseMatrix normalized_adjacency(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix p(n, n);
  for (const Edge& e : g.edges()) {
    const double value = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    p(e.u, e.v) = value;
    p(e.v, e.u) = value;
  }
  return p;
}

Spectrum graph_spectrum(const Graph& g, double tolerance) {
  return eigendecompose(normalized_adjacency(g), tolerance);
}

KernelBasis kernel_basis(const Graph& g, int q, double tolerance) {
  if (q < 1) fail(errc::invalid_argument, "q must be >= 1");
  const int n = g.node_count();
  const int m = g.edge_count();
  const int mq = m * q;

  // (C^T C)[(f,j),(g,l)] = (B^T B)[j,l] independently of the copies f,g.
  const DenseMatrix b = incidence_matrix(g);
  DenseMatrix btb(m, m);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += b(i, j) * b(i, l);
      btb(j, l) = dot;
    }
  DenseMatrix ctc(mq, mq);
  for (int fj = 0; fj < mq; ++fj)
    for (int gl = 0; gl < mq; ++gl) ctc(fj, gl) = btb(fj % m, gl % m);

  const Spectrum spec = eigendecompose(ctc);
  int kernel_count = 0;
  for (int c = mq - 1; c >= 0 && std::fabs(spec.eigenvalues[c]) < tolerance; --c) ++kernel_count;

  const Bipartition bip = bipartition(g);
  const int rank_b = bip.is_bipartite ? n - 1 : n;
  if (mq - kernel_count != rank_b)
    fail(errc::rank_mismatch, "numeric rank " + std::to_string(mq - kernel_count) +
                                  " but incidence rank should be " + std::to_string(rank_b));

  KernelBasis basis;
  basis.tolerance = tolerance;
  basis.vectors = DenseMatrix(mq, kernel_count);
  for (int z = 0; z < kernel_count; ++z) {
    const int src = mq - kernel_count + z;
    for (int i = 0; i < mq; ++i) basis.vectors(i, z) = spec.eigenvectors(i, src);
  }
  orthonormalize_block(basis.vectors, 0, kernel_count);

  // C y must vanish entrywise for every basis vector.
  for (int z = 0; z < kernel_count; ++z) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int col = 0; col < mq; ++col) acc += b(i, col % m) * basis.vectors(col, z);
      if (std::fabs(acc) > tolerance)
        fail(errc::rank_mismatch, "kernel residual " + std::to_string(acc) + " at row " +
                                      std::to_string(i));
    }
  }
  return basis;
}

Spectrum transfer_spectrum(const Spectrum& spec_g, const Graph& g, int q) {
  if (q < 1) fail(errc::invalid_argument, "q must be >= 1");
  const int n = g.node_count();
  const int m = g.edge_count();
  if (spec_g.size() != n) fail(errc::invalid_argument, "spectrum/graph size mismatch");
  const int mq = m * q;
  const int total = n + mq;

  const Bipartition bip = bipartition(g);
  const int paired = bip.is_bipartite ? n - 1 : n;

  std::vector<double> values;
  values.reserve(total);
  DenseMatrix vectors(total, total);
  int col = 0;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<double> inv_sqrt_deg(n);
  for (int i = 0; i < n; ++i) inv_sqrt_deg[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));

  for (int i = 0; i < paired; ++i) {
    const double lambda = spec_g.eigenvalues[i];
    if (1.0 + lambda <= spec_g.tolerance)
      fail(errc::degenerate_transfer,
           "eigenvalue " + std::to_string(lambda) + " too close to -1 in the nonzero branch");
    const double hat = std::sqrt((1.0 + lambda) / 2.0);
    const double coef = std::sqrt(1.0 / (2.0 * q * (1.0 + lambda)));

    // Entries on old nodes are shared by the +/- pair; new-node entries
    // flip sign with the eigenvalue.
    std::vector<double> new_part(mq);
    for (int j = 0; j < m; ++j) {
      const Edge& e = g.edges()[j];
      const double value = coef * (spec_g.eigenvectors(e.u, i) * inv_sqrt_deg[e.u] +
                                   spec_g.eigenvectors(e.v, i) * inv_sqrt_deg[e.v]);
      for (int f = 0; f < q; ++f) new_part[f * m + j] = value;
    }
    for (int sign : {+1, -1}) {
      values.push_back(sign > 0 ? hat : -hat);
      for (int j = 0; j < n; ++j) vectors(j, col) = spec_g.eigenvectors(j, i) * inv_sqrt2;
      for (int x = 0; x < mq; ++x) vectors(n + x, col) = sign * new_part[x];
      ++col;
    }
  }

  if (bip.is_bipartite) {
    values.push_back(0.0);
    for (int j = 0; j < n; ++j) vectors(j, col) = spec_g.eigenvectors(j, n - 1);
    ++col;
  }

  const KernelBasis kernel = kernel_basis(g, q);
  for (int z = 0; z < kernel.count(); ++z) {
    values.push_back(0.0);
    for (int x = 0; x < mq; ++x) vectors(n + x, col) = kernel.vectors(x, z);
    ++col;
  }

  if (col != total)
    throw std::logic_error("transfer_spectrum: assembled " + std::to_string(col) +
                           " of " + std::to_string(total) + " eigenvectors");

  // Sort descending, keeping eigenvector columns attached.
  std::vector<int> order(total);
  for (int i = 0; i < total; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return values[x] > values[y]; });

  Spectrum result;
  result.tolerance = spec_g.tolerance;
  result.eigenvalues.resize(total);
  result.eigenvectors = DenseMatrix(total, total);
  for (int c = 0; c < total; ++c) {
    result.eigenvalues[c] = values[order[c]];
    for (int r = 0; r < total; ++r) result.eigenvectors(r, c) = vectors(r, order[c]);
  }

  // A QR pass inside each degenerate group enforces orthonormality.
  const auto groups = group_eigenvalues(result.eigenvalues);
  std::size_t first = 0;
  for (const auto& [value, count] : groups) {
    (void)value;
    if (count > 1) orthonormalize_block(result.eigenvectors, first, first + count);
    first += count;
  }
  for (int c = 0; c < total; ++c) apply_sign_convention(result.eigenvectors, c);
  return result;
}

std::vector<double> kernel_sum_residuals(const Graph& g, int q, const Spectrum& spec_g,
                                         const KernelBasis& basis) {
  const int n = g.node_count();
  const int m = g.edge_count();
  const int mq = m * q;
  const Bipartition bip = bipartition(g);
  const int last = bip.is_bipartite ? n - 1 : n;  // exclusive, 0-based

  std::vector<double> inv_sqrt_deg(n);
  for (int i = 0; i < n; ++i) inv_sqrt_deg[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));

  std::vector<double> residuals(mq);
  for (int x = 0; x < mq; ++x) {
    const int j = x % m;
    const Edge& e = g.edges()[j];
    KahanSum rhs_sum;
    for (int k = 1; k < last; ++k) {
      const double lambda = spec_g.eigenvalues[k];
      const double term = spec_g.eigenvectors(e.u, k) * inv_sqrt_deg[e.u] +
                          spec_g.eigenvectors(e.v, k) * inv_sqrt_deg[e.v];
      rhs_sum.add(term * term / ((1.0 + lambda) * q));
    }
    const double rhs = 1.0 - 1.0 / mq - rhs_sum.value();
    KahanSum lhs;
    for (int z = 0; z < basis.count(); ++z) lhs.add(basis.vectors(x, z) * basis.vectors(x, z));
    residuals[x] = std::fabs(lhs.value() - rhs);
  }
  return residuals;
}

std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted_desc,
                                                      double gap) {
  std::vector<std::pair<double, int>> groups;
  std::size_t i = 0;
  while (i < sorted_desc.size()) {
    std::size_t j = i + 1;
    while (j < sorted_desc.size() && sorted_desc[j - 1] - sorted_desc[j] <= gap) ++j;
    double mean = 0.0;
    for (std::size_t k = i; k < j; ++k) mean += sorted_desc[k];
    mean /= static_cast<double>(j - i);
    groups.emplace_back(mean, static_cast<int>(j - i));
    i = j;
  }
  return groups;
}

}  // namespace subdiv

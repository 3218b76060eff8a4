#pragma once

#include <utility>
#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/matrix.hpp"

namespace subdiv {

inline constexpr double kEigenTolerance = 1e-12;
inline constexpr double kKernelRankTolerance = 1e-10;
inline constexpr double kGroupGapTolerance = 1e-6;

/// Eigendecomposition of a symmetric matrix: eigenvalues sorted descending,
/// eigenvectors[.][i] is the unit column paired with eigenvalues[i]. The
/// sign convention makes the first component of largest magnitude positive.
struct Spectrum {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;
  double tolerance = kEigenTolerance;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// P = D^{-1/2} A D^{-1/2}; entry (i,j) = A(i,j)/sqrt(d_i d_j).
DenseMatrix normalized_adjacency(const Graph& g);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `tolerance` (cap: 100 sweeps). Throws NotSymmetric/NoConvergence.
Spectrum eigendecompose(const DenseMatrix& matrix, double tolerance = kEigenTolerance);

/// eigendecompose(normalized_adjacency(g)).
Spectrum graph_spectrum(const Graph& g, double tolerance = kEigenTolerance);

/// Orthonormal basis of Ker(C), C = [B B ... B] with q horizontal copies of
/// the incidence matrix. Columns of `vectors` are the basis; the column
/// ordering of C matches the new-node labeling of q_subdivide.
struct KernelBasis {
  DenseMatrix vectors;  // (m*q) x count
  double tolerance = kKernelRankTolerance;

  int count() const { return static_cast<int>(vectors.cols()); }
};

/// Kernel vectors are the eigenvectors of C^T C with eigenvalue below the
/// rank tolerance, re-orthonormalized by Gram-Schmidt. Throws RankMismatch
/// when the numeric rank disagrees with the bipartiteness prediction
/// (rank(B) = n-1 for bipartite graphs, n otherwise).
KernelBasis kernel_basis(const Graph& g, int q, double tolerance = kKernelRankTolerance);

/// Spectrum of S_q(G) assembled from the spectrum of G: nonzero eigenvalues
/// come in pairs +-sqrt((1+lambda)/2) over the paired eigenvalues of G
/// (all n of them, or the top n-1 when G is bipartite), zeros fill the
/// rest (multiplicity mq-n, +2 when bipartite). Throws DegenerateTransfer
/// if a lambda ~ -1 enters the nonzero branch.
Spectrum transfer_spectrum(const Spectrum& spec_g, const Graph& g, int q);

/// Per-new-node residual of the kernel square-sum identity
/// sum_z Y_zj^2 = 1 - 1/(mq) - sum_k (1/((1+lambda_k)q)) (v_ks/sqrt(d_s) + v_kt/sqrt(d_t))^2.
std::vector<double> kernel_sum_residuals(const Graph& g, int q, const Spectrum& spec_g,
                                         const KernelBasis& basis);

/// Groups a descending eigenvalue list into (value, multiplicity) runs with
/// the given gap tolerance; value is the group mean.
std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted_desc,
                                                      double gap = kGroupGapTolerance);

}  // namespace subdiv

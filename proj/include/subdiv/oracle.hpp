#pragma once

#include <cstdint>
#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/matrix.hpp"

namespace subdiv {

/// Exact hitting times to `target` from every node, via the absorbing-chain
/// linear system h_target = 0, h_i = 1 + sum_k T(i,k) h_k, solved by
/// Gaussian elimination with partial pivoting.
std::vector<double> hitting_oracle(const Graph& g, int target);

/// hitting_oracle for every target, as a full matrix H(i,j) = T_ij.
DenseMatrix hitting_oracle_matrix(const Graph& g);

/// r_ij = L+_ii + L+_jj - 2 L+_ij with L+ the Moore-Penrose pseudoinverse
/// of the combinatorial Laplacian D - A (zero eigenvalue's reciprocal set
/// to 0).
DenseMatrix resistance_pinv_oracle(const Graph& g);

struct WalkEnsembleResult {
  double estimate = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(walks)
  long long walks = 0;
  std::uint64_t seed = 0;
};

inline constexpr long long kWalkStepBudget = 1000000000LL;

/// SplitMix64: 64-bit counter-based generator; cheap to split by mixing a
/// stream id into the seed, so per-walk substreams are order-independent.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z);
  /// Independent substream for (seed, stream).
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint32_t next_below(std::uint32_t bound);

private:
  std::uint64_t state_;
};

/// Mean first-passage steps from `source` to `target` over independent
/// seeded walks; bit-reproducible for a fixed (seed, walks). Throws
/// StepBudgetExceeded if a single walk passes 1e9 steps.
WalkEnsembleResult mc_hitting(const Graph& g, int source, int target, long long walks,
                              std::uint64_t seed);

}  // namespace subdiv

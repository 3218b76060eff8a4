#include "subdiv/oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "subdiv/errors.hpp"
#include "subdiv/spectral.hpp"

namespace subdiv {

namespace {

constexpr double kPivotFloor = 1e-12;
constexpr double kNullEigenFloor = 1e-9;

}  // namespace

std::vector<double> hitting_oracle(const Graph& g, int target) {
  const int n = g.node_count();
  if (target < 0 || target >= n) fail(errc::index_out_of_range, "target " + std::to_string(target));
  const int dim = n - 1;

  // Row/column c of the system corresponds to node c (< target) or c+1.
  auto node_of = [&](int c) { return c < target ? c : c + 1; };
  auto index_of = [&](int u) { return u < target ? u : u - 1; };

  DenseMatrix a(dim, dim);
  std::vector<double> rhs(dim, 1.0);
  for (int c = 0; c < dim; ++c) {
    const int u = node_of(c);
    a(c, c) = 1.0;
    const double p = 1.0 / g.degree(u);
    for (int v : g.neighbors(u)) {
      if (v == target) continue;
      a(c, index_of(v)) -= p;
    }
  }

  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  for (int col = 0; col < dim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    if (std::fabs(a(pivot, col)) < kPivotFloor)
      fail(errc::singular_system, "pivot " + std::to_string(a(pivot, col)) + " at column " +
                                      std::to_string(col));
    if (pivot != col) {
      for (int c = 0; c < dim; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(rhs[col], rhs[pivot]);
    }
    const double inv = 1.0 / a(col, col);
    for (int r = col + 1; r < dim; ++r) {
      const double factor = a(r, col) * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < dim; ++c) a(r, c) -= factor * a(col, c);
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> x(dim);
  for (int r = dim - 1; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < dim; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }

  std::vector<double> hitting(n, 0.0);
  for (int c = 0; c < dim; ++c) hitting[node_of(c)] = x[c];
  return hitting;
}

DenseMatrix hitting_oracle_matrix(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix h(n, n);
  for (int j = 0; j < n; ++j) {
    const std::vector<double> column = hitting_oracle(g, j);
    for (int i = 0; i < n; ++i) h(i, j) = column[i];
  }
  return h;
}

DenseMatrix resistance_pinv_oracle(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix laplacian(n, n);
  for (int i = 0; i < n; ++i) laplacian(i, i) = g.degree(i);
  for (const Edge& e : g.edges()) {
    laplacian(e.u, e.v) = -1.0;
    laplacian(e.v, e.u) = -1.0;
  }
  const Spectrum spec = eigendecompose(laplacian);

  std::vector<double> inv(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = spec.eigenvalues[k];
    inv[k] = std::fabs(lambda) <= kNullEigenFloor ? 0.0 : 1.0 / lambda;
  }

  DenseMatrix pinv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      KahanSum acc;
      for (int k = 0; k < n; ++k)
        acc.add(inv[k] * spec.eigenvectors(i, k) * spec.eigenvectors(j, k));
      pinv(i, j) = acc.value();
      pinv(j, i) = acc.value();
    }

  DenseMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) r(i, j) = pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);
  return r;
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(mix(seed ^ mix(stream * 0xD1B54A32D192ED03ULL + 1)));
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint32_t SplitMix64::next_below(std::uint32_t bound) {
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

WalkEnsembleResult mc_hitting(const Graph& g, int source, int target, long long walks,
                              std::uint64_t seed) {
  const int n = g.node_count();
  if (source < 0 || source >= n || target < 0 || target >= n)
    fail(errc::index_out_of_range, "walk endpoints");
  if (source == target) fail(errc::same_node, "node " + std::to_string(source));
  if (walks < 1) fail(errc::invalid_argument, "walks must be >= 1");

  KahanSum sum, sum_sq;
  for (long long w = 0; w < walks; ++w) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(w));
    long long steps = 0;
    int node = source;
    while (node != target) {
      const auto& nbrs = g.neighbors(node);
      node = nbrs[rng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
      if (++steps > kWalkStepBudget)
        fail(errc::step_budget_exceeded, "walk " + std::to_string(w) + " passed " +
                                             std::to_string(kWalkStepBudget) + " steps");
    }
    const double length = static_cast<double>(steps);
    sum.add(length);
    sum_sq.add(length * length);
  }

  WalkEnsembleResult result;
  result.walks = walks;
  result.seed = seed;
  result.estimate = sum.value() / static_cast<double>(walks);
  if (walks > 1) {
    const double nn = static_cast<double>(walks);
    double variance = (sum_sq.value() - nn * result.estimate * result.estimate) / (nn - 1.0);
    if (variance < 0.0) variance = 0.0;
    result.std_error = std::sqrt(variance / nn);
  }
  return result;
}

}  // namespace subdiv

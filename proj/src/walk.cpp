#include "subdiv/walk.hpp"

#include <cmath>
#include <string>

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

constexpr double kGapFloor = 1e-12;

void check_pair(int i, int j, int n) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    fail(errc::index_out_of_range, "node pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (i == j) fail(errc::same_node, "node " + std::to_string(i));
}

// Connectedness makes lambda_1 = 1 simple; a second eigenvalue this close
// to 1 means the solver failed, not that the term should be skipped.
void check_gap(double lambda, int k) {
  if (1.0 - lambda < kGapFloor)
    fail(errc::degenerate_spectrum,
         "eigenvalue " + std::to_string(lambda) + " at position " + std::to_string(k + 1) +
             " duplicates the top eigenvalue");
}

}  // namespace

double hitting_time_spectral(const Graph& g, const Spectrum& spec, const Bipartition& bip, int i,
                             int j) {
  const int n = g.node_count();
  check_pair(i, j, n);
  const double two_m = 2.0 * g.edge_count();
  const int last = bip.is_bipartite ? n - 1 : n;  // exclusive, 0-based
  const double wi = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
  const double wj = 1.0 / std::sqrt(static_cast<double>(g.degree(j)));

  KahanSum sum;
  for (int k = 1; k < last; ++k) {
    const double lambda = spec.eigenvalues[k];
    check_gap(lambda, k);
    const double vki = spec.eigenvectors(i, k) * wi;
    const double vkj = spec.eigenvectors(j, k) * wj;
    sum.add((vkj * vkj - vki * vkj) / (1.0 - lambda));
  }
  double t = two_m * sum.value();
  if (bip.is_bipartite && bip.color[i] != bip.color[j]) t += 1.0;
  return t;
}

double kemeny_spectral(const Spectrum& spec) {
  KahanSum sum;
  for (int k = 1; k < spec.size(); ++k) {
    const double lambda = spec.eigenvalues[k];
    check_gap(lambda, k);
    sum.add(1.0 / (1.0 - lambda));
  }
  return sum.value();
}

WalkMetrics walk_metrics(const Graph& g, const Spectrum& spec, const Bipartition& bip) {
  const int n = g.node_count();
  WalkMetrics metrics;
  metrics.hitting = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) metrics.hitting(i, j) = hitting_time_spectral(g, spec, bip, i, j);
  metrics.kemeny = kemeny_spectral(spec);
  metrics.stationary.resize(n);
  const double two_m = 2.0 * g.edge_count();
  for (int i = 0; i < n; ++i) metrics.stationary[i] = g.degree(i) / two_m;
  return metrics;
}

WalkMetrics walk_metrics(const Graph& g) {
  return walk_metrics(g, graph_spectrum(g), bipartition(g));
}

double hitting_time_transfer(const WalkMetrics& base, const SubdivisionMap& map, int i, int j) {
  check_pair(i, j, map.total_count());
  const DenseMatrix& t = base.hitting;
  const double two_mq = 2.0 * map.base_edge_count() * map.q();

  if (map.is_old(i) && map.is_old(j)) return 4.0 * t(i, j);

  if (!map.is_old(i) && map.is_old(j)) {
    const ParentEdge p = map.parent(i);
    return 1.0 + 2.0 * (t(p.s, j) + t(p.t, j));
  }

  if (map.is_old(i)) {
    const ParentEdge p = map.parent(j);
    return two_mq - 1.0 + 2.0 * (t(i, p.s) + t(i, p.t)) - (t(p.t, p.s) + t(p.s, p.t));
  }

  const ParentEdge pi = map.parent(i);
  const ParentEdge pj = map.parent(j);
  return two_mq + t(pi.s, pj.s) + t(pi.t, pj.s) + t(pi.s, pj.t) + t(pi.t, pj.t) -
         (t(pj.s, pj.t) + t(pj.t, pj.s));
}

double kemeny_transfer(double kemeny_g, int m, int n, int q) {
  if (m < 1 || n < 2 || q < 1) fail(errc::invalid_argument, "kemeny_transfer needs m>=1, n>=2, q>=1");
  return 4.0 * kemeny_g + (2.0 * m * q - 2.0 * n + 1.0) / 2.0;
}

}  // namespace subdiv

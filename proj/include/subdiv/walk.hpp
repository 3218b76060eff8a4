#pragma once

#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/matrix.hpp"
#include "subdiv/spectral.hpp"

namespace subdiv {

/// Random-walk summary for one graph: hitting-time matrix T(i,j) (expected
/// steps from i until first arrival at j, zero diagonal), Kemeny constant,
/// and the stationary distribution d_i/2m.
struct WalkMetrics {
  DenseMatrix hitting;
  double kemeny = 0.0;
  std::vector<double> stationary;
};

/// Hitting time from the eigenpairs of the normalized adjacency matrix:
/// T_ij = 2m sum_{k>=2} (1/(1-lambda_k)) (v_kj^2/d_j - v_ki v_kj/sqrt(d_i d_j)).
/// Bipartite graphs sum to k = n-1 and add 1 when i and j sit in different
/// color classes. Throws SameNode for i == j.
double hitting_time_spectral(const Graph& g, const Spectrum& spec, const Bipartition& bip, int i,
                             int j);

/// K(G) = sum_{i>=2} 1/(1 - lambda_i).
double kemeny_spectral(const Spectrum& spec);

WalkMetrics walk_metrics(const Graph& g, const Spectrum& spec, const Bipartition& bip);
WalkMetrics walk_metrics(const Graph& g);

/// Hitting time in S_q(G) from hitting times in G. Cases: old->old 4T_ij;
/// new->old 1 + 2(T_sj + T_tj); old->new 2mq - 1 + 2(T_is + T_it) - (T_ts + T_st);
/// new->new 2mq + T_su + T_tu + T_sv + T_tv - (T_uv + T_vu).
double hitting_time_transfer(const WalkMetrics& base, const SubdivisionMap& map, int i, int j);

/// K(S_q(G)) = 4 K(G) + (2mq - 2n + 1)/2.
double kemeny_transfer(double kemeny_g, int m, int n, int q);

}  // namespace subdiv

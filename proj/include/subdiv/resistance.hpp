#pragma once

#include "subdiv/graph.hpp"
#include "subdiv/matrix.hpp"
#include "subdiv/spectral.hpp"

namespace subdiv {

/// Effective resistances plus the three Kirchhoff-type indices of one graph.
struct ResistanceMetrics {
  DenseMatrix resistance;
  double kirchhoff = 0.0;         // sum of r_ij over unordered pairs
  double additive_dk = 0.0;       // weights (d_i + d_j)
  double multiplicative_dk = 0.0; // weights d_i * d_j
};

struct KirchhoffIndices {
  double kirchhoff = 0.0;
  double additive_dk = 0.0;
  double multiplicative_dk = 0.0;
};

/// r_ij = sum_{k>=2} (1/(1-lambda_k)) (v_ki/sqrt(d_i) - v_kj/sqrt(d_j))^2;
/// bipartite graphs include the k = n term as written.
double resistance_spectral(const Graph& g, const Spectrum& spec, int i, int j);

/// Pair sums over the full resistance matrix, compensated summation.
KirchhoffIndices indices_from_resistance(const Graph& g, const DenseMatrix& resistance);

ResistanceMetrics resistance_metrics(const Graph& g, const Spectrum& spec);
ResistanceMetrics resistance_metrics(const Graph& g);

/// Resistance in S_q(G) from resistances in G. Cases: old/old (2/q) r_ij;
/// new i (parents s,t), old j: 1/2 + (2 r_sj + 2 r_tj - r_st)/(2q);
/// new/new (parents {s,t},{u,v}): 1 + (r_su + r_tu + r_sv + r_tv - r_st - r_uv)/(2q).
double resistance_transfer(const ResistanceMetrics& base, const SubdivisionMap& map, int i, int j);

/// sum_{i in V'} sum_{j in V} r^_ij = K_add(G) + (mnq - n^2 + n)/2.
double vprime_v_sum(const ResistanceMetrics& base, const Graph& g, int q);

/// sum_{{i,j} in V'} r^_ij = (q/2) K_mult(G) + mq(mq-1)/2 - m(n-1)q/2.
double vprime_vprime_sum(const ResistanceMetrics& base, const Graph& g, int q);

/// K_mult(S_q(G)) = 8q K_mult(G) + 2mq(2mq - 2n + 1).
double multiplicative_dk_transfer(double mult_dk_g, int m, int n, int q);

/// K_add(S_q(G)) = 4 K_add(G) + 4q K_mult(G) + mq(3mq - 2n + 1) - n(n-1).
double additive_dk_transfer(double add_dk_g, double mult_dk_g, int m, int n, int q);

/// K(S_q(G)) = (2/q) K(G) + K_add(G) + (q/2) K_mult(G) + (m^2 q^2 - n(n-1))/2.
double kirchhoff_transfer(double kirchhoff_g, double add_dk_g, double mult_dk_g, int m, int n,
                          int q);

}  // namespace subdiv

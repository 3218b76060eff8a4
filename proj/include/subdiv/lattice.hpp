#pragma once

#include "subdiv/graph.hpp"
#include "subdiv/rational.hpp"

namespace subdiv {

/// Exact metrics of a base graph feeding the iterated-subdivision formulas.
struct BaseMetrics {
  Rational edge_count;        // m
  Rational node_count;        // n
  Rational kemeny;            // K
  Rational kirchhoff;         // plain Kirchhoff index
  Rational additive_dk;
  Rational multiplicative_dk;

  /// Two nodes joined by one edge: m=1, n=2, K=1/2, indices (1, 2, 1).
  static BaseMetrics single_edge();
};

struct LatticeSpec {
  int q = 2;
  int k = 0;
  BaseMetrics base = BaseMetrics::single_edge();

  /// H_{q,k}: the k-fold q-subdivision of a single edge (q >= 2).
  static LatticeSpec hierarchical(int q, int k);
};

Rational iterated_edge_count(const LatticeSpec& spec);  // (2q)^k m
Rational iterated_node_count(const LatticeSpec& spec);  // mq((2q)^k - 1)/(2q-1) + n

/// Explicit k-step formulas, exact in rationals; the q = 2 and q != 2
/// branches are separate closed forms.
Rational iterated_kemeny(const LatticeSpec& spec);
Rational iterated_mult_dk(const LatticeSpec& spec);
Rational iterated_add_dk(const LatticeSpec& spec);
Rational iterated_kirchhoff(const LatticeSpec& spec);

/// One exact subdivision step applied to all six base quantities.
BaseMetrics transfer_step(const BaseMetrics& base, int q);

struct LatticeClosedForms {
  Rational kemeny;
  Rational multiplicative_dk;
  Rational additive_dk;
  Rational kirchhoff;
};

/// The four single-edge-base closed forms for H_{q,k}; q >= 2, k >= 0.
LatticeClosedForms lattice_closed_forms(int q, int k);

/// Explicit H_{q,k} graph; H_{2,1} is the 4-cycle.
Graph build_lattice(int q, int k, int node_cap = kDefaultNodeCap);

}  // namespace subdiv

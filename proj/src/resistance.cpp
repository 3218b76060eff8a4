#include "subdiv/resistance.hpp"

#include <cmath>
#include <string>

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

void check_pair(int i, int j, int n) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    fail(errc::index_out_of_range, "node pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (i == j) fail(errc::same_node, "node " + std::to_string(i));
}

}  // namespace

double resistance_spectral(const Graph& g, const Spectrum& spec, int i, int j) {
  const int n = g.node_count();
  check_pair(i, j, n);
  const double wi = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
  const double wj = 1.0 / std::sqrt(static_cast<double>(g.degree(j)));
  KahanSum sum;
  for (int k = 1; k < n; ++k) {
    const double lambda = spec.eigenvalues[k];
    if (1.0 - lambda < 1e-12)
      fail(errc::degenerate_spectrum, "eigenvalue " + std::to_string(lambda) +
                                          " duplicates the top eigenvalue");
    const double diff = spec.eigenvectors(i, k) * wi - spec.eigenvectors(j, k) * wj;
    sum.add(diff * diff / (1.0 - lambda));
  }
  return sum.value();
}

KirchhoffIndices indices_from_resistance(const Graph& g, const DenseMatrix& resistance) {
  const int n = g.node_count();
  KahanSum plain, additive, multiplicative;
  for (int i = 0; i < n; ++i) {
    const double di = g.degree(i);
    for (int j = i + 1; j < n; ++j) {
      const double r = resistance(i, j);
      const double dj = g.degree(j);
      plain.add(r);
      additive.add((di + dj) * r);
      multiplicative.add(di * dj * r);
    }
  }
  return KirchhoffIndices{plain.value(), additive.value(), multiplicative.value()};
}

ResistanceMetrics resistance_metrics(const Graph& g, const Spectrum& spec) {
  const int n = g.node_count();
  ResistanceMetrics metrics;
  metrics.resistance = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double r = resistance_spectral(g, spec, i, j);
      metrics.resistance(i, j) = r;
      metrics.resistance(j, i) = r;
    }
  const KirchhoffIndices idx = indices_from_resistance(g, metrics.resistance);
  metrics.kirchhoff = idx.kirchhoff;
  metrics.additive_dk = idx.additive_dk;
  metrics.multiplicative_dk = idx.multiplicative_dk;
  return metrics;
}

ResistanceMetrics resistance_metrics(const Graph& g) {
  return resistance_metrics(g, graph_spectrum(g));
}

double resistance_transfer(const ResistanceMetrics& base, const SubdivisionMap& map, int i, int j) {
  check_pair(i, j, map.total_count());
  const DenseMatrix& r = base.resistance;
  const double q = map.q();

  if (map.is_old(i) && map.is_old(j)) return (2.0 / q) * r(i, j);

  if (map.is_old(i) || map.is_old(j)) {
    const int old_node = map.is_old(i) ? i : j;
    const ParentEdge p = map.parent(map.is_old(i) ? j : i);
    return 0.5 + (2.0 * r(p.s, old_node) + 2.0 * r(p.t, old_node) - r(p.s, p.t)) / (2.0 * q);
  }

  const ParentEdge pi = map.parent(i);
  const ParentEdge pj = map.parent(j);
  return 1.0 + (r(pi.s, pj.s) + r(pi.t, pj.s) + r(pi.s, pj.t) + r(pi.t, pj.t) - r(pi.s, pi.t) -
                r(pj.s, pj.t)) /
                   (2.0 * q);
}

double vprime_v_sum(const ResistanceMetrics& base, const Graph& g, int q) {
  const double m = g.edge_count();
  const double n = g.node_count();
  return base.additive_dk + (m * n * q - n * n + n) / 2.0;
}

double vprime_vprime_sum(const ResistanceMetrics& base, const Graph& g, int q) {
  const double m = g.edge_count();
  const double n = g.node_count();
  const double mq = m * q;
  return (q / 2.0) * base.multiplicative_dk + mq * (mq - 1.0) / 2.0 - m * (n - 1.0) * q / 2.0;
}

double multiplicative_dk_transfer(double mult_dk_g, int m, int n, int q) {
  const double mq = static_cast<double>(m) * q;
  return 8.0 * q * mult_dk_g + 2.0 * mq * (2.0 * mq - 2.0 * n + 1.0);
}

double additive_dk_transfer(double add_dk_g, double mult_dk_g, int m, int n, int q) {
  const double mq = static_cast<double>(m) * q;
  const double nn = n;
  return 4.0 * add_dk_g + 4.0 * q * mult_dk_g + mq * (3.0 * mq - 2.0 * nn + 1.0) - nn * (nn - 1.0);
}

double kirchhoff_transfer(double kirchhoff_g, double add_dk_g, double mult_dk_g, int m, int n,
                          int q) {
  const double mq = static_cast<double>(m) * q;
  const double nn = n;
  return (2.0 / q) * kirchhoff_g + add_dk_g + (q / 2.0) * mult_dk_g +
         (mq * mq - nn * (nn - 1.0)) / 2.0;
}

}  // namespace subdiv

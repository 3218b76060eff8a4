#include "subdiv/lattice.hpp"

#include <string>

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

using R = Rational;

void check_spec(const LatticeSpec& spec, int min_q) {
  if (spec.q < min_q)
    fail(errc::invalid_argument, "q must be >= " + std::to_string(min_q) + ", got " + std::to_string(spec.q));
  if (spec.k < 0) fail(errc::invalid_argument, "k must be >= 0, got " + std::to_string(spec.k));
}

}  // namespace

BaseMetrics BaseMetrics::single_edge() {
  BaseMetrics base;
  base.edge_count = 1;
  base.node_count = 2;
  base.kemeny = R(1) / 2;
  base.kirchhoff = 1;
  base.additive_dk = 2;
  base.multiplicative_dk = 1;
  return base;
}

LatticeSpec LatticeSpec::hierarchical(int q, int k) {
  LatticeSpec spec;
  spec.q = q;
  spec.k = k;
  spec.base = BaseMetrics::single_edge();
  check_spec(spec, 2);
  return spec;
}

Rational iterated_edge_count(const LatticeSpec& spec) {
  check_spec(spec, 1);
  return pow(R(2 * spec.q), spec.k) * spec.base.edge_count;
}

Rational iterated_node_count(const LatticeSpec& spec) {
  check_spec(spec, 1);
  const R m = spec.base.edge_count;
  return m * spec.q * (pow(R(2 * spec.q), spec.k) - 1) / R(2 * spec.q - 1) + spec.base.node_count;
}

Rational iterated_kemeny(const LatticeSpec& spec) {
  check_spec(spec, 1);
  const int q = spec.q;
  const int k = spec.k;
  const R m = spec.base.edge_count;
  const R n = spec.base.node_count;
  const R k0 = spec.base.kemeny;
  const R four_k = pow(R(4), k);

  if (q == 2) {
    return four_k * k0 + m * k * four_k / 3 + ((4 * m + 3) / R(6) - n) * (four_k - 1) / 3;
  }
  const R two_q_k = pow(R(2 * q), k);
  return four_k * k0 + m * q * (q - 1) / R((q - 2) * (2 * q - 1)) * (two_q_k - four_k) +
         ((2 * q * m + 2 * q - 1) / R(2 * (2 * q - 1)) - n) * (four_k - 1) / 3;
}

Rational iterated_mult_dk(const LatticeSpec& spec) {
  check_spec(spec, 1);
  const int q = spec.q;
  const int k = spec.k;
  const R m = spec.base.edge_count;
  const R n = spec.base.node_count;
  const R kt0 = spec.base.multiplicative_dk;

  if (q == 2) {
    const R sixteen_k = pow(R(16), k);
    const R four_k = pow(R(4), k);
    return sixteen_k * kt0 + 2 * m * m * k * sixteen_k / 3 +
           ((4 * m * m + 3 * m) / R(3) - 2 * m * n) * (sixteen_k - four_k) / 3;
  }
  const R eight_q_k = pow(R(8 * q), k);
  const R two_q_2k = pow(R(2 * q), 2 * k);
  const R two_q_k = pow(R(2 * q), k);
  return eight_q_k * kt0 +
         2 * m * m * q * (q - 1) / R((q - 2) * (2 * q - 1)) * (two_q_2k - eight_q_k) +
         ((2 * m * m * q + 2 * m * q - m) / R(2 * q - 1) - 2 * m * n) * (eight_q_k - two_q_k) / 3;
}

Rational iterated_add_dk(const LatticeSpec& spec) {
  check_spec(spec, 1);
  const int q = spec.q;
  const int k = spec.k;
  const R m = spec.base.edge_count;
  const R n = spec.base.node_count;
  const R ka0 = spec.base.additive_dk;
  const R kt0 = spec.base.multiplicative_dk;
  const R four_k = pow(R(4), k);

  if (q == 2) {
    const R sixteen_k = pow(R(16), k);
    return four_k * ka0 + 2 * (sixteen_k - four_k) * kt0 / 3 +
           (sixteen_k - four_k) / 9 * 2 * m * (2 * m - 2 * n + 1) + sixteen_k / 9 * 4 * m * m * k -
           (four_k - 1) / 27 * (2 * m - 3 * n) * (2 * m - 3 * n + 3);
  }
  const R eight_q_k = pow(R(8 * q), k);
  const R two_q_2k = pow(R(2 * q), 2 * k);
  const R two_q_k = pow(R(2 * q), k);
  const R mq_frac = m * q / R(2 * q - 1);
  return four_k * ka0 +
         3 * m * m * q * q * q * (q - 1) * (two_q_2k - four_k) /
             R((q - 2) * (q + 1) * (2 * q - 1) * (2 * q - 1)) +
         (eight_q_k - four_k) / R(2 * q - 1) *
             (q * kt0 - 2 * m * m * q * q / R(3 * (q - 2)) - m * (2 * n - 1) * q / 3) -
         m * q * (two_q_k - four_k) / R(3 * (2 * q - 1)) * (2 * mq_frac - 2 * n + 1) -
         (four_k - 1) / 3 * ((mq_frac - n) * (mq_frac - n + 1));
}

Rational iterated_kirchhoff(const LatticeSpec& spec) {
  check_spec(spec, 1);
  const int q = spec.q;
  const int k = spec.k;
  const R m = spec.base.edge_count;
  const R n = spec.base.node_count;
  const R kk0 = spec.base.kirchhoff;
  const R ka0 = spec.base.additive_dk;
  const R kt0 = spec.base.multiplicative_dk;

  if (q == 2) {
    // Telescoping the step recurrence sums a 4^k geometric series, a 16^k
    // one, and the arithmetico-geometric sum(j*16^(j-1)) = (1+(15k-1)16^k)/225.
    const R four_k = pow(R(4), k);
    const R sixteen_k = pow(R(16), k);
    return kk0 + (four_k - 1) / 3 * ka0 + (four_k - 1) * (four_k - 1) / 9 * kt0 +
           2 * m * m * (1 + (15 * k - 1) * sixteen_k) / 405 +
           m * (14 * m - 10 * n + 5) * (sixteen_k - 1) / 135 +
           (four_k - 1) / 81 * (-16 * m * m + 24 * m * n - 12 * m - 9 * n * (n - 1)) -
           R(k) * (2 * m - 3 * n) * (2 * m - 3 * n + 3) / 54;
  }

  const R two_over_q_k = pow(R(2) / q, k);
  const R four_k = pow(R(4), k);
  const R eight_q_k = pow(R(8 * q), k);
  const R two_q_k = pow(R(2 * q), k);
  const R two_q_2k = pow(R(2 * q), 2 * k);
  const R s = R(2 * q - 1);
  const R mq_frac = m * q / s;
  const R half = R(1) / 2;

  return two_over_q_k * kk0 + q * (four_k - two_over_q_k) / (2 * s) * ka0 +
         q * q * (eight_q_k - 2 * four_k + two_over_q_k) / (4 * s * s) * kt0 +
         m * m * q * q * q * (q - 1) * (two_q_2k - two_over_q_k) /
             (2 * R(q - 2) * R(q + 1) * s * s) -
         m * q * q * (eight_q_k - two_over_q_k) / (6 * s * s) * (m * q / R(q - 2) + n - half) +
         m * q * q * (two_q_k - two_over_q_k) / (3 * R(q + 1) * s) * (-mq_frac + n - half) -
         q * (four_k - two_over_q_k) / s *
             (m * m * q * q * (q - 1) / (2 * s * s * R(q + 1)) +
              (mq_frac - n) * (mq_frac - n + 1) / 6) +
         q * (two_over_q_k - 1) / (6 * R(q - 2)) * (mq_frac - n) * (mq_frac - n + 1);
}

BaseMetrics transfer_step(const BaseMetrics& base, int q) {
  if (q < 1) fail(errc::invalid_argument, "q must be >= 1");
  const R m = base.edge_count;
  const R n = base.node_count;
  const R mq = m * q;

  BaseMetrics next;
  next.edge_count = 2 * mq;
  next.node_count = n + mq;
  next.kemeny = 4 * base.kemeny + (2 * mq - 2 * n + 1) / R(2);
  next.multiplicative_dk = 8 * q * base.multiplicative_dk + 2 * mq * (2 * mq - 2 * n + 1);
  next.additive_dk = 4 * base.additive_dk + 4 * q * base.multiplicative_dk +
                     mq * (3 * mq - 2 * n + 1) - n * (n - 1);
  next.kirchhoff = R(2) / q * base.kirchhoff + base.additive_dk +
                   R(q) / 2 * base.multiplicative_dk + (mq * mq - n * (n - 1)) / R(2);
  return next;
}

LatticeClosedForms lattice_closed_forms(int q, int k) {
  if (q < 2) fail(errc::invalid_argument, "q must be >= 2, got " + std::to_string(q));
  if (k < 0) fail(errc::invalid_argument, "k must be >= 0, got " + std::to_string(k));
  LatticeClosedForms forms;
  const R four_k = pow(R(4), k);

  if (q == 2) {
    const R sixteen_k = pow(R(16), k);
    forms.kemeny = (R(6 * k + 4) * four_k + 5) / 18;
    forms.multiplicative_dk = (R(6 * k + 4) * sixteen_k + 5 * four_k) / 9;
    forms.additive_dk = R(4 * (k + 1)) * sixteen_k / 9 + 38 * four_k / R(27) + R(4) / 27;
    forms.kirchhoff = (2 * R(3 * k + 4) * sixteen_k + 38 * four_k + 35 - R(6) * k) / 81;
    return forms;
  }

  const R two_q_k = pow(R(2 * q), k);
  const R two_q_2k = pow(R(2 * q), 2 * k);
  const R eight_q_k = pow(R(8 * q), k);
  const R two_over_q_k = pow(R(2) / q, k);
  const R s = R(2 * q - 1);

  forms.kemeny = R(q) * (q - 1) * two_q_k / (R(q - 2) * s) - q * four_k / R(3 * (q - 2)) +
                 R(4 * q - 3) / (6 * s);
  forms.multiplicative_dk = 2 * q * (q - 1) * two_q_2k / (R(q - 2) * s) -
                            2 * q * eight_q_k / R(3 * (q - 2)) + R(4 * q - 3) * two_q_k / (3 * s);
  forms.additive_dk = 3 * R(q) * q * q * (q - 1) * two_q_2k / (R(q - 2) * R(q + 1) * s * s) -
                      2 * R(q) * q * eight_q_k / (3 * R(q - 2) * s) +
                      q * R(4 * q - 3) * two_q_k / (3 * s * s) +
                      2 * R(3 * q * q + 2 * q - 2) * four_k / (3 * R(q + 1) * s) +
                      R(q - 1) * R(3 * q - 2) / (3 * s * s);
  forms.kirchhoff =
      R(q) * q * q * (q - 1) * two_q_2k / (2 * R(q - 2) * R(q + 1) * s * s) -
      R(q) * q * q * eight_q_k / (6 * R(q - 2) * s * s) +
      R(q) * q * R(4 * q - 3) * two_q_k / (6 * R(q + 1) * s * s) +
      q * R(3 * q * q + 2 * q - 2) * four_k / (3 * R(q + 1) * s * s) +
      (R(5) * q * q * q * q - 9 * R(q) * q * q - 5 * R(q) * q + 12 * q - 4) * two_over_q_k /
          (2 * R(q - 2) * R(q + 1) * s * s) -
      R(q - 1) * q * R(3 * q - 2) / (6 * R(q - 2) * s * s);
  return forms;
}

Graph build_lattice(int q, int k, int node_cap) {
  if (q < 2) fail(errc::invalid_argument, "q must be >= 2, got " + std::to_string(q));
  const Graph edge = Graph::build(2, {{0, 1}});
  return iterate_subdivide(edge, q, k, node_cap);
}

}  // namespace subdiv

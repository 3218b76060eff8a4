#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/spectral.hpp"
#include "test_support.hpp"

using namespace subdiv;
using namespace subdiv::testing;

namespace {

double max_offdiag_gap_from_identity(const DenseMatrix& v) {
  const std::size_t n = v.cols();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < v.rows(); ++i) dot += v(i, a) * v(i, b);
      worst = std::max(worst, std::fabs(dot - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

std::vector<double> sorted_desc(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace

TEST_CASE("normalized adjacency entries") {
  const DenseMatrix p_edge = normalized_adjacency(single_edge());
  CHECK(p_edge(0, 0) == 0.0);
  CHECK(p_edge(0, 1) == 1.0);
  CHECK(p_edge(1, 0) == 1.0);

  const DenseMatrix p_k3 = normalized_adjacency(complete(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p_k3(i, j) == (i == j ? 0.0 : 0.5));

  const DenseMatrix p_c4 = normalized_adjacency(cycle(4));
  CHECK(p_c4(0, 1) == 0.5);
  CHECK(p_c4(0, 2) == 0.0);
}

TEST_CASE("eigendecompose: two-node flip matrix") {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  const Spectrum spec = eigendecompose(m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(spec.eigenvectors(0, 0) == doctest::Approx(inv_sqrt2));
  CHECK(spec.eigenvectors(1, 0) == doctest::Approx(inv_sqrt2));
  CHECK(spec.eigenvectors(0, 1) == doctest::Approx(inv_sqrt2));
  CHECK(spec.eigenvectors(1, 1) == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("eigendecompose: K3 and C4 spectra") {
  const Spectrum k3 = graph_spectrum(complete(3));
  CHECK(k3.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k3.eigenvalues[1] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k3.eigenvalues[2] == doctest::Approx(-0.5).epsilon(1e-12));

  const Spectrum c4 = graph_spectrum(cycle(4));
  const std::vector<double> expected = {1.0, 0.0, 0.0, -1.0};
  for (int i = 0; i < 4; ++i)
    CHECK(c4.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("eigendecompose rejects asymmetric input") {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_AS(eigendecompose(m), Error);
}

TEST_CASE("spectrum invariants over the corpus") {
  for (const auto& [name, g] : corpus()) {
    INFO(name);
    const Spectrum spec = graph_spectrum(g);
    const int n = g.node_count();
    const double two_m = 2.0 * g.edge_count();

    CHECK(max_offdiag_gap_from_identity(spec.eigenvectors) <= 10 * spec.tolerance);
    CHECK(std::fabs(spec.eigenvalues[0] - 1.0) <= 1e-10);
    for (double lambda : spec.eigenvalues) CHECK(std::fabs(lambda) <= 1.0 + 1e-10);

    // Perron column: sqrt(d_i/2m), positive by the sign convention.
    for (int i = 0; i < n; ++i)
      CHECK(spec.eigenvectors(i, 0) ==
            doctest::Approx(std::sqrt(g.degree(i) / two_m)).epsilon(1e-9));

    const bool bip = bipartition(g).is_bipartite;
    CHECK((std::fabs(spec.eigenvalues[n - 1] + 1.0) <= 1e-10) == bip);

    // Trace checks: sum lambda = 0 and sum lambda^2 = trace(P^2).
    double sum = 0.0, sum_sq = 0.0;
    for (double lambda : spec.eigenvalues) {
      sum += lambda;
      sum_sq += lambda * lambda;
    }
    const DenseMatrix p = normalized_adjacency(g);
    double trace_p2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) trace_p2 += p(i, j) * p(j, i);
    CHECK(std::fabs(sum) <= 1e-9);
    CHECK(std::fabs(sum_sq - trace_p2) <= 1e-9);
  }
}

TEST_CASE("kernel basis sizes and residuals") {
  CHECK(kernel_basis(complete(3), 1).count() == 0);

  const KernelBasis edge2 = kernel_basis(single_edge(), 2);
  REQUIRE(edge2.count() == 1);
  // Proportional to (1,-1) across the two block copies.
  CHECK(std::fabs(edge2.vectors(0, 0) + edge2.vectors(1, 0)) <= 1e-12);
  CHECK(std::fabs(std::fabs(edge2.vectors(0, 0)) - 1.0 / std::sqrt(2.0)) <= 1e-12);

  CHECK(kernel_basis(complete(3), 2).count() == 3);

  for (const auto& [name, g] : corpus()) {
    for (int q : {1, 2, 3}) {
      INFO(name, " q=", q);
      const KernelBasis basis = kernel_basis(g, q);
      const int expected =
          g.edge_count() * q - (bipartition(g).is_bipartite ? g.node_count() - 1 : g.node_count());
      CHECK(basis.count() == expected);
      CHECK(max_offdiag_gap_from_identity(basis.vectors) <= 1e-10);
    }
  }
}

TEST_CASE("transfer spectrum equals direct spectrum of the subdivision") {
  const Spectrum k3 = graph_spectrum(complete(3));
  const Spectrum transferred = transfer_spectrum(k3, complete(3), 2);
  const std::vector<double> expected = {1.0, 0.5, 0.5, 0.0, 0.0, 0.0, -0.5, -0.5, -1.0};
  REQUIRE(transferred.size() == 9);
  for (int i = 0; i < 9; ++i)
    CHECK(transferred.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-10));

  // Single edge, q=1: the path P3.
  const Spectrum edge = graph_spectrum(single_edge());
  const Spectrum p3 = transfer_spectrum(edge, single_edge(), 1);
  REQUIRE(p3.size() == 3);
  CHECK(p3.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(p3.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(p3.eigenvalues[2] == doctest::Approx(-1.0));

  // Single edge, q=3: K_{2,3}; zero multiplicity mq-n+2 = 3.
  const Spectrum k23 = transfer_spectrum(edge, single_edge(), 3);
  REQUIRE(k23.size() == 5);
  CHECK(k23.eigenvalues[0] == doctest::Approx(1.0));
  for (int i = 1; i <= 3; ++i) CHECK(std::fabs(k23.eigenvalues[i]) <= 1e-12);
  CHECK(k23.eigenvalues[4] == doctest::Approx(-1.0));

  for (const auto& [name, g] : corpus()) {
    for (int q : {1, 2, 3}) {
      INFO(name, " q=", q);
      const Spectrum base = graph_spectrum(g);
      const Spectrum via_transfer = transfer_spectrum(base, g, q);
      const Spectrum direct = graph_spectrum(q_subdivide(g, q).first);
      REQUIRE(via_transfer.size() == direct.size());
      const auto lhs = sorted_desc(via_transfer.eigenvalues);
      const auto rhs = sorted_desc(direct.eigenvalues);
      for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(std::fabs(lhs[i] - rhs[i]) <= 1e-8);

      CHECK(max_offdiag_gap_from_identity(via_transfer.eigenvectors) <= 1e-9);

      // Spectrum of a bipartite graph is symmetric about zero.
      for (int i = 0; i < via_transfer.size(); ++i)
        CHECK(std::fabs(via_transfer.eigenvalues[i] +
                        via_transfer.eigenvalues[via_transfer.size() - 1 - i]) <= 1e-9);
    }
  }
}

TEST_CASE("multiplicity law m_phat(lhat) = m_p(2 lhat^2 - 1) for nonzero lhat") {
  for (const auto& [name, g] : corpus()) {
    for (int q : {1, 2, 3}) {
      INFO(name, " q=", q);
      const Spectrum base = graph_spectrum(g);
      const Spectrum direct = graph_spectrum(q_subdivide(g, q).first);
      const auto base_groups = group_eigenvalues(base.eigenvalues);
      const auto sub_groups = group_eigenvalues(direct.eigenvalues);
      for (const auto& [value, count] : sub_groups) {
        if (std::fabs(value) <= 1e-6) continue;
        const double pulled_back = 2.0 * value * value - 1.0;
        int base_count = 0;
        for (const auto& [bv, bc] : base_groups)
          if (std::fabs(bv - pulled_back) <= 1e-6) base_count += bc;
        CHECK(count == base_count);
      }
    }
  }
}

TEST_CASE("degenerate transfer is an error, not a wrong answer") {
  // A doctored spectrum for K3 with an eigenvalue at -1 in the paired range.
  Spectrum fake = graph_spectrum(complete(3));
  fake.eigenvalues[1] = -1.0 + 1e-15;
  CHECK_THROWS_AS(transfer_spectrum(fake, complete(3), 2), Error);
}

TEST_CASE("kernel square-sum identity") {
  SUBCASE("empty kernel forces the right side to vanish") {
    const Graph k3 = complete(3);
    const auto residuals = kernel_sum_residuals(k3, 1, graph_spectrum(k3), kernel_basis(k3, 1));
    for (double r : residuals) CHECK(r <= 1e-9);
  }
  SUBCASE("whole corpus") {
    for (const auto& [name, g] : corpus()) {
      for (int q : {1, 2, 3}) {
        INFO(name, " q=", q);
        const auto residuals = kernel_sum_residuals(g, q, graph_spectrum(g), kernel_basis(g, q));
        for (double r : residuals) CHECK(r <= 1e-9);
      }
    }
  }
}

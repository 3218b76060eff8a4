// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "subdiv/lattice.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/resistance.hpp"
#include "subdiv/spectral.hpp"
#include "subdiv/suite.hpp"
#include "subdiv/walk.hpp"

using namespace subdiv;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string name;
  bool pass = true;
  double worst = 0.0;
  std::string detail;
  double seconds = 0.0;
};

std::vector<Criterion> results;

void record(int number, const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.number = number;
  c.name = name;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("criterion %d (%s): %s  worst=%.3e  %.2fs%s%s\n", c.number, c.name.c_str(),
              c.pass ? "PASS" : "FAIL", c.worst, c.seconds, c.detail.empty() ? "" : "  ",
              c.detail.c_str());
  std::fflush(stdout);
  results.push_back(c);
}

void expect(Criterion& c, bool ok, const std::string& what) {
  if (!ok) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += what;
  }
}

void track(Criterion& c, double residual, double tolerance, const std::string& what) {
  c.worst = std::max(c.worst, residual);
  expect(c, residual <= tolerance, what + " residual " + std::to_string(residual));
}

struct GridCell {
  std::string name;
  Graph g;
  int q;
  Graph s;
  SubdivisionMap map;
};

std::vector<GridCell> build_grid() {
  std::vector<GridCell> grid;
  for (const CorpusEntry& entry : default_corpus()) {
    const Graph g = Graph::build(entry.node_count, entry.edges);
    for (int q : {1, 2, 3}) {
      auto [s, map] = q_subdivide(g, q);
      grid.push_back({entry.name, g, q, std::move(s), std::move(map)});
    }
  }
  return grid;
}

}  // namespace

int main() {
  const std::vector<GridCell> grid = build_grid();

  record(1, "spectrum transfer", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const Spectrum base = graph_spectrum(cell.g);
      const Spectrum transferred = transfer_spectrum(base, cell.g, cell.q);
      const Spectrum direct = graph_spectrum(cell.s);
      const int total = cell.s.node_count();
      expect(c, transferred.size() == total, cell.name + ": size");
      for (int i = 0; i < total; ++i)
        track(c, std::fabs(transferred.eigenvalues[i] - direct.eigenvalues[i]), 1e-8,
              cell.name + " q=" + std::to_string(cell.q));

      const int expected_zero = cell.g.edge_count() * cell.q - cell.g.node_count() +
                                (bipartition(cell.g).is_bipartite ? 2 : 0);
      auto zeros = [](const std::vector<double>& v) {
        return static_cast<int>(std::count_if(v.begin(), v.end(),
                                              [](double x) { return std::fabs(x) <= 1e-7; }));
      };
      expect(c, zeros(transferred.eigenvalues) == expected_zero,
             cell.name + " q=" + std::to_string(cell.q) + ": transfer zero multiplicity");
      expect(c, zeros(direct.eigenvalues) == expected_zero,
             cell.name + " q=" + std::to_string(cell.q) + ": direct zero multiplicity");
    }
  });
  if (!results.empty() && results.back().seconds >= 30.0) {
    results.back().pass = false;
    std::printf("criterion 1 runtime %.2fs exceeded 30s\n", results.back().seconds);
  }

  record(2, "hitting-time transfer", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const WalkMetrics base = walk_metrics(cell.g);
      const WalkMetrics direct = walk_metrics(cell.s);
      const DenseMatrix oracle = hitting_oracle_matrix(cell.s);
      const int total = cell.s.node_count();
      double worst_transfer = 0.0, worst_oracle = 0.0;
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
          if (i != j)
            worst_transfer =
                std::max(worst_transfer, std::fabs(hitting_time_transfer(base, cell.map, i, j) -
                                                   direct.hitting(i, j)));
          worst_oracle = std::max(worst_oracle, std::fabs(direct.hitting(i, j) - oracle(i, j)));
        }
      track(c, worst_transfer, 1e-7, cell.name + " q=" + std::to_string(cell.q) + " transfer");
      track(c, worst_oracle, 1e-7, cell.name + " q=" + std::to_string(cell.q) + " oracle");
    }

    // Spot values on C6 = S_1(K3): old-old = 8, new to antipodal old = 9.
    const Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    const WalkMetrics base = walk_metrics(k3);
    auto [c6, map] = q_subdivide(k3, 1);
    track(c, std::fabs(hitting_time_transfer(base, map, 0, 1) - 8.0), 1e-9, "C6 old-old spot");
    track(c, std::fabs(hitting_time_transfer(base, map, 3, 2) - 9.0), 1e-9, "C6 new-old spot");
  });

  record(3, "Kemeny transfer", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const double base = kemeny_spectral(graph_spectrum(cell.g));
      const double direct = kemeny_spectral(graph_spectrum(cell.s));
      const double via =
          kemeny_transfer(base, cell.g.edge_count(), cell.g.node_count(), cell.q);
      track(c, std::fabs(via - direct), 1e-9, cell.name + " q=" + std::to_string(cell.q));
    }
    // K(C4) = 5/2 equals the q=2, k=1 lattice value (10*4+5)/18.
    const Graph c4 = build_lattice(2, 1);
    const double kemeny_c4 = kemeny_spectral(graph_spectrum(c4));
    track(c, std::fabs(kemeny_c4 - (10.0 * 4.0 + 5.0) / 18.0), 1e-9, "C4 anchor");
    const Rational closed = lattice_closed_forms(2, 1).kemeny;
    expect(c, closed == Rational(5, 2), "closed form (egKem) at q=2,k=1");
  });

  record(4, "resistance transfer, Foster, commute", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const Spectrum spec = graph_spectrum(cell.g);
      const ResistanceMetrics base = resistance_metrics(cell.g, spec);
      const WalkMetrics walk = walk_metrics(cell.g, spec, bipartition(cell.g));
      const DenseMatrix oracle = resistance_pinv_oracle(cell.s);
      const int total = cell.s.node_count();
      const std::string tag = cell.name + " q=" + std::to_string(cell.q);

      double worst = 0.0;
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
          if (i != j)
            worst = std::max(worst, std::fabs(resistance_transfer(base, cell.map, i, j) -
                                              oracle(i, j)));
      track(c, worst, 1e-9, tag + " vs pinv oracle");

      KahanSum foster_base, foster_sub;
      for (const Edge& e : cell.g.edges()) foster_base.add(base.resistance(e.u, e.v));
      for (const Edge& e : cell.s.edges()) foster_sub.add(resistance_transfer(base, cell.map, e.u, e.v));
      track(c, std::fabs(foster_base.value() - (cell.g.node_count() - 1)), 1e-9, tag + " Foster(G)");
      track(c, std::fabs(foster_sub.value() - (total - 1)), 1e-9, tag + " Foster(S_q)");

      const double two_m_hat = 2.0 * cell.s.edge_count();
      double worst_commute = 0.0;
      for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) {
          const double lhs = two_m_hat * resistance_transfer(base, cell.map, i, j);
          const double rhs = hitting_time_transfer(walk, cell.map, i, j) +
                             hitting_time_transfer(walk, cell.map, j, i);
          worst_commute = std::max(worst_commute, std::fabs(lhs - rhs));
        }
      track(c, worst_commute, 1e-7, tag + " commute");
    }
  });

  record(5, "index transfers", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const Spectrum spec = graph_spectrum(cell.g);
      const ResistanceMetrics base = resistance_metrics(cell.g, spec);
      const KirchhoffIndices brute = indices_from_resistance(cell.s, resistance_pinv_oracle(cell.s));
      const int m = cell.g.edge_count(), n = cell.g.node_count(), q = cell.q;
      const std::string tag = cell.name + " q=" + std::to_string(q);

      const double kt = multiplicative_dk_transfer(base.multiplicative_dk, m, n, q);
      const double ka = additive_dk_transfer(base.additive_dk, base.multiplicative_dk, m, n, q);
      const double kk =
          kirchhoff_transfer(base.kirchhoff, base.additive_dk, base.multiplicative_dk, m, n, q);
      track(c, std::fabs(kt - brute.multiplicative_dk) / std::fabs(brute.multiplicative_dk), 1e-6,
            tag + " mult");
      track(c, std::fabs(ka - brute.additive_dk) / std::fabs(brute.additive_dk), 1e-6, tag + " add");
      track(c, std::fabs(kk - brute.kirchhoff) / std::fabs(brute.kirchhoff), 1e-6, tag + " plain");

      const double kemeny_s = kemeny_spectral(graph_spectrum(cell.s));
      track(c, std::fabs(brute.multiplicative_dk - 2.0 * cell.s.edge_count() * kemeny_s), 1e-8,
            tag + " 2m*Kemeny identity");
    }
  });

  record(6, "lattice closed forms", [&](Criterion& c) {
    for (int q = 2; q <= 6; ++q)
      for (int k = 0; k <= 8; ++k) {
        const LatticeSpec spec = LatticeSpec::hierarchical(q, k);
        const LatticeClosedForms forms = lattice_closed_forms(q, k);
        const std::string tag = "q=" + std::to_string(q) + ",k=" + std::to_string(k);
        expect(c, forms.kemeny == iterated_kemeny(spec), tag + " kemeny");
        expect(c, forms.multiplicative_dk == iterated_mult_dk(spec), tag + " mult");
        expect(c, forms.additive_dk == iterated_add_dk(spec), tag + " add");
        expect(c, forms.kirchhoff == iterated_kirchhoff(spec), tag + " kirchhoff");
      }

    const LatticeClosedForms base = lattice_closed_forms(2, 0);
    expect(c,
           base.kemeny == Rational(1, 2) && base.multiplicative_dk == Rational(1) &&
               base.additive_dk == Rational(2) && base.kirchhoff == Rational(1),
           "k=0 anchor (1/2, 1, 2, 1)");
    const LatticeClosedForms first = lattice_closed_forms(2, 1);
    expect(c,
           first.kemeny == Rational(5, 2) && first.multiplicative_dk == Rational(20) &&
               first.additive_dk == Rational(20) && first.kirchhoff == Rational(5),
           "q=2,k=1 anchor (5/2, 20, 20, 5)");

    for (int q : {2, 3})
      for (int k : {1, 2, 3}) {
        const Graph h = build_lattice(q, k);
        const LatticeClosedForms forms = lattice_closed_forms(q, k);
        const double kemeny = kemeny_spectral(graph_spectrum(h));
        const KirchhoffIndices idx = indices_from_resistance(h, resistance_pinv_oracle(h));
        const std::string tag = "numeric q=" + std::to_string(q) + ",k=" + std::to_string(k);
        track(c, std::fabs(kemeny - forms.kemeny.to_double()) / forms.kemeny.to_double(), 1e-7,
              tag + " kemeny");
        track(c,
              std::fabs(idx.multiplicative_dk - forms.multiplicative_dk.to_double()) /
                  forms.multiplicative_dk.to_double(),
              1e-7, tag + " mult");
        track(c,
              std::fabs(idx.additive_dk - forms.additive_dk.to_double()) /
                  forms.additive_dk.to_double(),
              1e-7, tag + " add");
        track(c, std::fabs(idx.kirchhoff - forms.kirchhoff.to_double()) / forms.kirchhoff.to_double(),
              1e-7, tag + " kirchhoff");
      }
  });
  if (results.back().seconds >= 60.0) {
    results.back().pass = false;
    std::printf("criterion 6 runtime %.2fs exceeded 60s\n", results.back().seconds);
  }

  record(7, "kernel square-sum identities", [&](Criterion& c) {
    for (const GridCell& cell : grid) {
      const Spectrum spec = graph_spectrum(cell.g);
      const KernelBasis basis = kernel_basis(cell.g, cell.q);
      for (double r : kernel_sum_residuals(cell.g, cell.q, spec, basis))
        track(c, r, 1e-9, cell.name + " q=" + std::to_string(cell.q));
    }
  });

  record(8, "Monte Carlo sanity", [&](Criterion& c) {
    struct Case {
      std::string name;
      Graph g;
      int i, j;
    };
    const std::vector<Case> cases = {
        {"K3", Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2},
        {"C4", build_lattice(2, 1), 0, 1},
        {"C6", Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}), 0, 3},
        {"H_2_2", build_lattice(2, 2), 0, 1},
    };
    for (const Case& mc : cases) {
      const double exact = hitting_oracle(mc.g, mc.j)[mc.i];
      const WalkEnsembleResult a = mc_hitting(mc.g, mc.i, mc.j, 100000, 20240601);
      const WalkEnsembleResult b = mc_hitting(mc.g, mc.i, mc.j, 100000, 20240601);
      expect(c, a.estimate == b.estimate && a.std_error == b.std_error,
             mc.name + " bit reproducibility");
      const double band = 4.0 * a.std_error;
      track(c, std::fabs(a.estimate - exact), band > 0 ? band : 1e-12, mc.name + " band");
    }
  });

  record(9, "scale check on H_{2,5}", [&](Criterion& c) {
    const Graph h = build_lattice(2, 5);
    expect(c, h.node_count() == 684 && h.edge_count() == 1024, "H_{2,5} size");
    const Spectrum spec = graph_spectrum(h);
    const double kemeny = kemeny_spectral(spec);
    const double closed = lattice_closed_forms(2, 5).kemeny.to_double();
    track(c, std::fabs(kemeny - closed) / closed, 1e-7, "Kemeny vs closed form");
  });
  if (results.back().seconds >= 300.0) {
    results.back().pass = false;
    std::printf("criterion 9 runtime %.2fs exceeded 300s\n", results.back().seconds);
  }

  int failures = 0;
  for (const Criterion& c : results)
    if (!c.pass) ++failures;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}

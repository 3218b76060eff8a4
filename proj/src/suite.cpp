#include "subdiv/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "subdiv/lattice.hpp"
#include "subdiv/matrix.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/resistance.hpp"
#include "subdiv/spectral.hpp"
#include "subdiv/walk.hpp"

namespace subdiv {

namespace {

// Pinned tolerances for the suite.
constexpr double kTolSpectrumTransfer = 1e-8;
constexpr double kTolHitting = 1e-7;
constexpr double kTolKemenyTransfer = 1e-9;
constexpr double kTolResistance = 1e-9;
constexpr double kTolFoster = 1e-9;
constexpr double kTolCommute = 1e-7;
constexpr double kTolIndexRelative = 1e-6;
constexpr double kTolMultIdentity = 1e-8;
constexpr double kTolSumIdentity = 1e-9;
constexpr double kTolVprimeSums = 1e-9;
constexpr double kTolLatticeNumeric = 1e-7;  // relative
constexpr double kZeroEigen = 1e-7;

using Clock = std::chrono::steady_clock;

class CellRunner {
public:
  CellRunner(std::vector<VerificationReport>& reports, std::string graph, int q)
      : reports_(reports), graph_(std::move(graph)), q_(q) {}

  /// Runs `body`, which fills residual/tolerance/note; exceptions become
  /// failing reports.
  void operator()(const std::string& check, const std::function<void(VerificationReport&)>& body,
                  bool statistical = false) const {
    VerificationReport report;
    report.graph = graph_;
    report.q = q_;
    report.check = check;
    report.statistical = statistical;
    const auto start = Clock::now();
    try {
      body(report);
      report.pass = report.note.empty() && std::isfinite(report.residual) &&
                    report.residual <= report.tolerance;
    } catch (const std::exception& e) {
      report.pass = false;
      report.residual = std::numeric_limits<double>::quiet_NaN();
      report.note = e.what();
    }
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    reports_.push_back(report);
  }

private:
  std::vector<VerificationReport>& reports_;
  std::string graph_;
  int q_;
};

double relative_gap(double actual, double expected) {
  return std::fabs(actual - expected) / std::max(1.0, std::fabs(expected));
}

double foster_residual(const Graph& g, const std::function<double(int, int)>& resistance) {
  KahanSum sum;
  for (const Edge& e : g.edges()) sum.add(resistance(e.u, e.v));
  return std::fabs(sum.value() - (g.node_count() - 1));
}

void base_graph_cells(const CellRunner& cell, const Graph& g, const Spectrum& spec,
                      const Bipartition& bip, const WalkMetrics& walk,
                      const ResistanceMetrics& res) {
  cell("hitting-oracle", [&](VerificationReport& r) {
    const DenseMatrix oracle = hitting_oracle_matrix(g);
    double worst = 0.0;
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = 0; j < g.node_count(); ++j)
        worst = std::max(worst, std::fabs(walk.hitting(i, j) - oracle(i, j)));
    r.residual = worst;
    r.tolerance = kTolHitting;
  });

  cell("resistance-oracle", [&](VerificationReport& r) {
    const DenseMatrix oracle = resistance_pinv_oracle(g);
    double worst = 0.0;
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = 0; j < g.node_count(); ++j)
        worst = std::max(worst, std::fabs(res.resistance(i, j) - oracle(i, j)));
    r.residual = worst;
    r.tolerance = kTolResistance;
  });

  cell("foster", [&](VerificationReport& r) {
    r.residual = foster_residual(g, [&](int i, int j) { return res.resistance(i, j); });
    r.tolerance = kTolFoster;
  });

  cell("mult-dk-identity", [&](VerificationReport& r) {
    r.residual = std::fabs(res.multiplicative_dk - 2.0 * g.edge_count() * kemeny_spectral(spec));
    r.tolerance = kTolMultIdentity;
  });
  (void)bip;
}

void subdivision_cells(const CellRunner& cell, const Graph& g, const Spectrum& spec,
                       const Bipartition& bip, const WalkMetrics& walk,
                       const ResistanceMetrics& res, int q) {
  const int n = g.node_count();
  const int m = g.edge_count();
  auto [s, map] = q_subdivide(g, q);
  const int total = map.total_count();

  const Spectrum spec_s = graph_spectrum(s);
  const Bipartition bip_s = bipartition(s);

  cell("spectrum-transfer", [&](VerificationReport& r) {
    const Spectrum transferred = transfer_spectrum(spec, g, q);
    double worst = 0.0;
    for (int i = 0; i < total; ++i)
      worst = std::max(worst, std::fabs(transferred.eigenvalues[i] - spec_s.eigenvalues[i]));
    r.residual = worst;
    r.tolerance = kTolSpectrumTransfer;

    const int expected_zero = m * q - n + (bip.is_bipartite ? 2 : 0);
    auto count_zero = [](const std::vector<double>& values) {
      int count = 0;
      for (double v : values)
        if (std::fabs(v) <= kZeroEigen) ++count;
      return count;
    };
    const int zero_direct = count_zero(spec_s.eigenvalues);
    const int zero_transfer = count_zero(transferred.eigenvalues);
    if (zero_direct != expected_zero || zero_transfer != expected_zero)
      r.note = "zero multiplicity " + std::to_string(zero_transfer) + "/" +
               std::to_string(zero_direct) + ", expected " + std::to_string(expected_zero);
  });

  const WalkMetrics walk_s = walk_metrics(s, spec_s, bip_s);

  cell("hitting-transfer", [&](VerificationReport& r) {
    double worst = 0.0;
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) {
        if (i == j) continue;
        worst = std::max(worst,
                         std::fabs(hitting_time_transfer(walk, map, i, j) - walk_s.hitting(i, j)));
      }
    r.residual = worst;
    r.tolerance = kTolHitting;
  });

  cell("hitting-oracle", [&](VerificationReport& r) {
    const DenseMatrix oracle = hitting_oracle_matrix(s);
    double worst = 0.0;
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j)
        worst = std::max(worst, std::fabs(walk_s.hitting(i, j) - oracle(i, j)));
    r.residual = worst;
    r.tolerance = kTolHitting;
  });

  cell("kemeny-transfer", [&](VerificationReport& r) {
    r.residual = std::fabs(kemeny_transfer(walk.kemeny, m, n, q) - walk_s.kemeny);
    r.tolerance = kTolKemenyTransfer;
  });

  const DenseMatrix pinv_r = resistance_pinv_oracle(s);

  cell("resistance-transfer", [&](VerificationReport& r) {
    double worst = 0.0;
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) {
        if (i == j) continue;
        worst =
            std::max(worst, std::fabs(resistance_transfer(res, map, i, j) - pinv_r(i, j)));
      }
    r.residual = worst;
    r.tolerance = kTolResistance;
  });

  cell("foster", [&](VerificationReport& r) {
    r.residual = foster_residual(s, [&](int i, int j) { return resistance_transfer(res, map, i, j); });
    r.tolerance = kTolFoster;
  });

  cell("commute", [&](VerificationReport& r) {
    const double two_m_hat = 2.0 * s.edge_count();
    double worst = 0.0;
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j) {
        const double lhs = two_m_hat * resistance_transfer(res, map, i, j);
        const double rhs =
            hitting_time_transfer(walk, map, i, j) + hitting_time_transfer(walk, map, j, i);
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
    r.residual = worst;
    r.tolerance = kTolCommute;
  });

  cell("vprime-v-sum", [&](VerificationReport& r) {
    KahanSum brute;
    for (int i = n; i < total; ++i)
      for (int j = 0; j < n; ++j) brute.add(pinv_r(i, j));
    r.residual = std::fabs(vprime_v_sum(res, g, q) - brute.value());
    r.tolerance = kTolVprimeSums;
  });

  cell("vprime-vprime-sum", [&](VerificationReport& r) {
    KahanSum brute;
    for (int i = n; i < total; ++i)
      for (int j = i + 1; j < total; ++j) brute.add(pinv_r(i, j));
    r.residual = std::fabs(vprime_vprime_sum(res, g, q) - brute.value());
    r.tolerance = kTolVprimeSums;
  });

  const KirchhoffIndices brute = indices_from_resistance(s, pinv_r);

  cell("mult-dk-transfer", [&](VerificationReport& r) {
    r.residual =
        relative_gap(multiplicative_dk_transfer(res.multiplicative_dk, m, n, q), brute.multiplicative_dk);
    r.tolerance = kTolIndexRelative;
  });

  cell("add-dk-transfer", [&](VerificationReport& r) {
    r.residual = relative_gap(additive_dk_transfer(res.additive_dk, res.multiplicative_dk, m, n, q),
                              brute.additive_dk);
    r.tolerance = kTolIndexRelative;
  });

  cell("kirchhoff-transfer", [&](VerificationReport& r) {
    r.residual = relative_gap(
        kirchhoff_transfer(res.kirchhoff, res.additive_dk, res.multiplicative_dk, m, n, q),
        brute.kirchhoff);
    r.tolerance = kTolIndexRelative;
  });

  cell("mult-dk-identity", [&](VerificationReport& r) {
    r.residual = std::fabs(brute.multiplicative_dk - 2.0 * s.edge_count() * walk_s.kemeny);
    r.tolerance = kTolMultIdentity;
  });

  cell("sum-identities", [&](VerificationReport& r) {
    const KernelBasis basis = kernel_basis(g, q);
    const std::vector<double> residuals = kernel_sum_residuals(g, q, spec, basis);
    double worst = 0.0;
    for (double v : residuals) worst = std::max(worst, v);
    r.residual = worst;
    r.tolerance = kTolSumIdentity;
  });
}

void lattice_cells(std::vector<VerificationReport>& reports, const SuiteOptions& options) {
  for (int q = 2; q <= 6; ++q) {
    const CellRunner cell(reports, "H_q" + std::to_string(q), q);
    cell("lattice-closed-form-exact", [&](VerificationReport& r) {
      r.tolerance = 0.0;
      r.residual = 0.0;
      for (int k = 0; k <= 8; ++k) {
        const LatticeSpec spec = LatticeSpec::hierarchical(q, k);
        const LatticeClosedForms forms = lattice_closed_forms(q, k);
        if (forms.kemeny != iterated_kemeny(spec) ||
            forms.multiplicative_dk != iterated_mult_dk(spec) ||
            forms.additive_dk != iterated_add_dk(spec) ||
            forms.kirchhoff != iterated_kirchhoff(spec)) {
          r.residual = 1.0;
          r.note = "mismatch at k=" + std::to_string(k);
          return;
        }
      }
    });
  }

  for (int q = 2; q <= 4; ++q) {
    const CellRunner cell(reports, "H_q" + std::to_string(q), q);
    cell("lattice-transfer-exact", [&](VerificationReport& r) {
      r.tolerance = 0.0;
      r.residual = 0.0;
      BaseMetrics rolled = BaseMetrics::single_edge();
      for (int k = 0; k <= 3; ++k) {
        const LatticeSpec spec = LatticeSpec::hierarchical(q, k);
        if (iterated_kemeny(spec) != rolled.kemeny ||
            iterated_mult_dk(spec) != rolled.multiplicative_dk ||
            iterated_add_dk(spec) != rolled.additive_dk ||
            iterated_kirchhoff(spec) != rolled.kirchhoff ||
            iterated_edge_count(spec) != rolled.edge_count ||
            iterated_node_count(spec) != rolled.node_count) {
          r.residual = 1.0;
          r.note = "mismatch at k=" + std::to_string(k);
          return;
        }
        rolled = transfer_step(rolled, q);
      }
    });
  }

  for (int q = 2; q <= 3; ++q) {
    for (int k = 1; k <= 3; ++k) {
      const CellRunner cell(reports, "H_q" + std::to_string(q) + "k" + std::to_string(k), q);
      cell("lattice-numeric", [&](VerificationReport& r) {
        const Graph h = build_lattice(q, k, options.node_cap);
        const LatticeClosedForms forms = lattice_closed_forms(q, k);
        const double kemeny = kemeny_spectral(graph_spectrum(h));
        const KirchhoffIndices idx = indices_from_resistance(h, resistance_pinv_oracle(h));
        double worst = relative_gap(kemeny, forms.kemeny.to_double());
        worst = std::max(worst, relative_gap(idx.multiplicative_dk, forms.multiplicative_dk.to_double()));
        worst = std::max(worst, relative_gap(idx.additive_dk, forms.additive_dk.to_double()));
        worst = std::max(worst, relative_gap(idx.kirchhoff, forms.kirchhoff.to_double()));
        r.residual = worst;
        r.tolerance = kTolLatticeNumeric;
      });
    }
  }
}

void monte_carlo_cells(std::vector<VerificationReport>& reports, const SuiteOptions& options) {
  struct McCase {
    std::string name;
    Graph graph;
    int source;
    int target;
  };
  std::vector<McCase> cases;
  cases.push_back({"K3", Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2});
  cases.push_back({"C4", build_lattice(2, 1), 0, 1});
  cases.push_back({"C6", Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}), 0, 3});
  cases.push_back({"H_2_2", build_lattice(2, 2), 0, 1});

  for (const McCase& mc : cases) {
    const CellRunner cell(reports, mc.name, 0);
    cell(
        "mc-hitting",
        [&](VerificationReport& r) {
          const double exact = hitting_oracle(mc.graph, mc.target)[mc.source];
          const WalkEnsembleResult est =
              mc_hitting(mc.graph, mc.source, mc.target, options.mc_walks, options.mc_seed);
          const double band = 4.0 * est.std_error;
          r.residual = std::fabs(est.estimate - exact);
          r.tolerance = band;
          if (est.std_error == 0.0 && r.residual == 0.0) r.tolerance = 1.0;  // deterministic walks
        },
        /*statistical=*/true);
  }
}

}  // namespace

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"single-edge", 2, {{0, 1}}});
  corpus.push_back({"P3", 3, {{0, 1}, {1, 2}}});
  corpus.push_back({"K3", 3, {{0, 1}, {1, 2}, {0, 2}}});
  corpus.push_back({"K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  corpus.push_back({"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
  corpus.push_back({"C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}});
  corpus.push_back({"S4-star", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}});
  corpus.push_back({"petersen",
                    10,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},      // outer cycle
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},      // spokes
                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}});   // inner pentagram
  return corpus;
}

std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                          const SuiteOptions& options) {
  std::vector<VerificationReport> reports;

  for (const CorpusEntry& entry : corpus) {
    const auto build_start = Clock::now();
    std::optional<Graph> maybe_g;
    try {
      maybe_g = Graph::build(entry.node_count, entry.edges);
    } catch (const std::exception& e) {
      VerificationReport report;
      report.graph = entry.name;
      report.check = "build";
      report.pass = false;
      report.residual = std::numeric_limits<double>::quiet_NaN();
      report.note = e.what();
      report.wall_seconds = std::chrono::duration<double>(Clock::now() - build_start).count();
      reports.push_back(report);
      continue;
    }
    const Graph& g = *maybe_g;

    const Spectrum spec = graph_spectrum(g);
    const Bipartition bip = bipartition(g);
    const WalkMetrics walk = walk_metrics(g, spec, bip);
    const ResistanceMetrics res = resistance_metrics(g, spec);

    base_graph_cells(CellRunner(reports, entry.name, 0), g, spec, bip, walk, res);
    for (int q : options.q_values)
      subdivision_cells(CellRunner(reports, entry.name, q), g, spec, bip, walk, res, q);
  }

  if (options.include_lattice) lattice_cells(reports, options);
  if (options.include_monte_carlo) monte_carlo_cells(reports, options);
  return reports;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& report : reports)
    if (!report.pass && !report.statistical) return false;
  return true;
}

}  // namespace subdiv

#include "subdiv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "subdiv/errors.hpp"
#include "subdiv/lattice.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/resistance.hpp"
#include "subdiv/spectral.hpp"
#include "subdiv/suite.hpp"
#include "subdiv/walk.hpp"

namespace subdiv {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kScalarMetrics = {"kemeny", "kirchhoff", "additive-dk",
                                                 "multiplicative-dk"};
const std::vector<std::string> kMatrixMetrics = {"hitting", "resistance"};

bool contains(const std::vector<std::string>& values, const std::string& needle) {
  return std::find(values.begin(), values.end(), needle) != values.end();
}

ordered_json matrix_to_json(const DenseMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_double(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

double max_entry_gap(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
  return worst;
}

ordered_json graph_summary(const Graph& g) {
  return {{"nodes", g.node_count()},
          {"edges", g.edge_count()},
          {"bipartite", bipartition(g).is_bipartite}};
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsage;
}

/// Scalar metric values of one graph computed directly from its spectrum.
struct ScalarValues {
  double kemeny = 0.0;
  double kirchhoff = 0.0;
  double additive_dk = 0.0;
  double multiplicative_dk = 0.0;

  double get(const std::string& name) const {
    if (name == "kemeny") return kemeny;
    if (name == "kirchhoff") return kirchhoff;
    if (name == "additive-dk") return additive_dk;
    return multiplicative_dk;
  }
};

ScalarValues scalar_values(const ResistanceMetrics& res, double kemeny) {
  ScalarValues v;
  v.kemeny = kemeny;
  v.kirchhoff = res.kirchhoff;
  v.additive_dk = res.additive_dk;
  v.multiplicative_dk = res.multiplicative_dk;
  return v;
}

}  // namespace

int cmd_subdivide(const SubdivideOptions& options, std::ostream& err) {
  try {
    if (options.q < 1) return usage_error(err, "--q must be >= 1");
    if (options.k < 0) return usage_error(err, "--k must be >= 0");
    const Graph g = load_edge_list(options.input);

    std::optional<SubdivisionMap> last_map;
    Graph result = g;
    if (options.k >= 1) {
      const Graph before_last = iterate_subdivide(g, options.q, options.k - 1, options.config.node_cap);
      auto [subdivided, map] = q_subdivide(before_last, options.q);
      if (subdivided.node_count() > options.config.node_cap)
        fail(errc::size_limit, "result would have " + std::to_string(subdivided.node_count()) +
                                   " nodes (cap " + std::to_string(options.config.node_cap) + ")");
      result = std::move(subdivided);
      last_map = std::move(map);
    }
    save_edge_list(options.output, result);

    ordered_json sidecar = report_skeleton(options.config);
    sidecar["q"] = options.q;
    sidecar["k"] = options.k;
    sidecar["nodes"] = result.node_count();
    sidecar["edges"] = result.edge_count();
    ordered_json parents = ordered_json::array();
    if (last_map) {
      sidecar["old_nodes"] = last_map->old_count();
      sidecar["base_edges"] = last_map->base_edge_count();
      for (int x = last_map->old_count(); x < last_map->total_count(); ++x) {
        const ParentEdge p = last_map->parent(x);
        parents.push_back({{"node", x}, {"s", p.s}, {"t", p.t}, {"copy", p.copy}, {"edge", p.edge_index}});
      }
    } else {
      sidecar["old_nodes"] = result.node_count();
      sidecar["base_edges"] = result.edge_count();
    }
    sidecar["parents"] = std::move(parents);

    const std::string map_path =
        options.map_output.empty() ? options.output + ".map.json" : options.map_output;
    std::ofstream map_out(map_path);
    if (!map_out) fail(errc::io_error, "cannot open " + map_path + " for writing");
    map_out << sidecar.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> metrics = options.metrics;
    if (metrics.empty()) metrics = kScalarMetrics;
    for (const std::string& name : metrics)
      if (!contains(kScalarMetrics, name) && !contains(kMatrixMetrics, name))
        return usage_error(err, "unknown metric \"" + name + "\"");
    const bool want_transfer = options.method == "transfer" || options.method == "both";
    const bool want_spectral = options.method == "spectral" || options.method == "both";
    if (!want_transfer && !want_spectral)
      return usage_error(err, "unknown method \"" + options.method + "\"");
    if (want_transfer && options.q < 1)
      fail(errc::method_unavailable, "transfer needs --q and a base-graph input");
    if (options.format != "json" && options.format != "table")
      return usage_error(err, "unknown format \"" + options.format + "\"");

    const Graph g = load_edge_list(options.input);
    const double tol = options.config.eig_tolerance;

    ordered_json doc = report_skeleton(options.config);
    doc["input"] = options.input;
    doc["graph"] = graph_summary(g);
    doc["method"] = options.method;
    if (options.q >= 1) doc["q"] = options.q;

    // The graph whose metrics are reported: S_q(G) when --q is given.
    std::optional<Graph> target;
    std::optional<SubdivisionMap> map;
    if (options.q >= 1) {
      auto [s, sub_map] = q_subdivide(g, options.q);
      doc["target"] = graph_summary(s);
      target = std::move(s);
      map = std::move(sub_map);
    }
    const Graph& reported = target ? *target : g;

    // Base-graph metrics feed both routes.
    const Spectrum spec_g = graph_spectrum(g, tol);
    const Bipartition bip_g = bipartition(g);
    std::optional<WalkMetrics> walk_g;
    std::optional<ResistanceMetrics> res_g;

    std::optional<ScalarValues> transfer_scalars;
    std::optional<DenseMatrix> transfer_hitting, transfer_resistance;
    if (want_transfer) {
      walk_g = walk_metrics(g, spec_g, bip_g);
      res_g = resistance_metrics(g, spec_g);
      const int m = g.edge_count(), n = g.node_count(), q = options.q;
      ScalarValues v;
      v.kemeny = kemeny_transfer(walk_g->kemeny, m, n, q);
      v.kirchhoff = kirchhoff_transfer(res_g->kirchhoff, res_g->additive_dk,
                                       res_g->multiplicative_dk, m, n, q);
      v.additive_dk = additive_dk_transfer(res_g->additive_dk, res_g->multiplicative_dk, m, n, q);
      v.multiplicative_dk = multiplicative_dk_transfer(res_g->multiplicative_dk, m, n, q);
      transfer_scalars = v;
      if (options.full_matrices) {
        const int total = map->total_count();
        DenseMatrix ht(total, total), rt(total, total);
        for (int i = 0; i < total; ++i)
          for (int j = 0; j < total; ++j) {
            if (i == j) continue;
            ht(i, j) = hitting_time_transfer(*walk_g, *map, i, j);
            rt(i, j) = resistance_transfer(*res_g, *map, i, j);
          }
        transfer_hitting = std::move(ht);
        transfer_resistance = std::move(rt);
      }
    }

    std::optional<ScalarValues> spectral_scalars;
    std::optional<DenseMatrix> spectral_hitting, spectral_resistance;
    if (want_spectral) {
      const Spectrum spec_r = options.q >= 1 ? graph_spectrum(reported, tol) : spec_g;
      const Bipartition bip_r = options.q >= 1 ? bipartition(reported) : bip_g;
      const WalkMetrics walk_r = walk_metrics(reported, spec_r, bip_r);
      const ResistanceMetrics res_r = resistance_metrics(reported, spec_r);
      spectral_scalars = scalar_values(res_r, walk_r.kemeny);
      if (options.full_matrices) {
        spectral_hitting = walk_r.hitting;
        spectral_resistance = res_r.resistance;
      }
    }

    ordered_json metrics_doc;
    for (const std::string& name : metrics) {
      ordered_json entry;
      if (contains(kScalarMetrics, name)) {
        if (transfer_scalars) entry["transfer"] = format_double(transfer_scalars->get(name));
        if (spectral_scalars) entry["spectral"] = format_double(spectral_scalars->get(name));
        if (transfer_scalars && spectral_scalars)
          entry["residual"] =
              format_double(std::fabs(transfer_scalars->get(name) - spectral_scalars->get(name)));
      } else {
        if (!options.full_matrices) {
          entry["omitted"] = true;
          entry["note"] = "pass --full-matrices to emit O(n^2) matrices";
        } else {
          const auto& t = name == "hitting" ? transfer_hitting : transfer_resistance;
          const auto& s = name == "hitting" ? spectral_hitting : spectral_resistance;
          if (t) entry["transfer"] = matrix_to_json(*t);
          if (s) entry["spectral"] = matrix_to_json(*s);
          if (t && s) entry["residual"] = format_double(max_entry_gap(*t, *s));
        }
      }
      metrics_doc[name] = std::move(entry);
    }
    doc["metrics"] = std::move(metrics_doc);

    if (options.format == "json") {
      out << doc.dump(2) << "\n";
    } else {
      std::ostringstream table;
      table << std::left << std::setw(20) << "metric" << std::setw(10) << "method"
            << "value\n";
      for (const std::string& name : metrics) {
        const ordered_json& entry = doc["metrics"][name];
        for (const auto& [key, value] : entry.items()) {
          if (!value.is_string()) continue;
          table << std::left << std::setw(20) << name << std::setw(10) << key
                << value.get<std::string>() << "\n";
        }
        if (entry.contains("omitted"))
          table << std::left << std::setw(20) << name << std::setw(10) << "-"
                << "omitted (pass --full-matrices)\n";
      }
      out << table.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_lattice(const LatticeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.q < 2) return usage_error(err, "--q must be >= 2");
    if (options.k < 0) return usage_error(err, "--k must be >= 0");
    if (options.format != "json" && options.format != "table")
      return usage_error(err, "unknown format \"" + options.format + "\"");

    auto row_json = [&](int k) {
      const LatticeClosedForms forms = lattice_closed_forms(options.q, k);
      const LatticeSpec spec = LatticeSpec::hierarchical(options.q, k);
      auto value = [](const Rational& r) {
        return ordered_json{{"exact", r.str()},
                            {"float", format_double(r.to_double())},
                            {"provenance", "closed-form"}};
      };
      ordered_json row;
      row["k"] = k;
      row["nodes"] = iterated_node_count(spec).str();
      row["edges"] = iterated_edge_count(spec).str();
      row["kemeny"] = value(forms.kemeny);
      row["multiplicative_dk"] = value(forms.multiplicative_dk);
      row["additive_dk"] = value(forms.additive_dk);
      row["kirchhoff"] = value(forms.kirchhoff);
      return row;
    };

    ordered_json doc = report_skeleton(options.config);
    doc["q"] = options.q;
    if (options.table_max >= 0) {
      ordered_json rows = ordered_json::array();
      for (int k = 0; k <= options.table_max; ++k) rows.push_back(row_json(k));
      doc["rows"] = std::move(rows);
    } else {
      doc["lattice"] = row_json(options.k);
    }

    if (options.format == "json") {
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    auto print_row = [&](const ordered_json& row) {
      out << std::left << std::setw(4) << row["k"].get<int>() << std::setw(10)
          << row["nodes"].get<std::string>() << std::setw(12) << row["edges"].get<std::string>()
          << std::setw(22) << row["kemeny"]["exact"].get<std::string>() << std::setw(26)
          << row["multiplicative_dk"]["exact"].get<std::string>() << std::setw(26)
          << row["additive_dk"]["exact"].get<std::string>()
          << row["kirchhoff"]["exact"].get<std::string>() << "\n";
    };
    out << std::left << std::setw(4) << "k" << std::setw(10) << "nodes" << std::setw(12) << "edges"
        << std::setw(22) << "kemeny" << std::setw(26) << "mult-dk" << std::setw(26) << "add-dk"
        << "kirchhoff\n";
    if (options.table_max >= 0) {
      for (const auto& row : doc["rows"]) print_row(row);
    } else {
      print_row(doc["lattice"]);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::vector<CorpusEntry> corpus;
    if (options.corpus == "default") {
      corpus = default_corpus();
    } else {
      namespace fs = std::filesystem;
      const fs::path path(options.corpus);
      std::vector<fs::path> files;
      if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
          if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
      } else if (fs::is_regular_file(path)) {
        files.push_back(path);
      } else {
        fail(errc::io_error, "corpus path " + options.corpus + " not found");
      }
      for (const auto& file : files) {
        // Only parsed here; run_suite does the building so that validation
        // failures land in the report instead of aborting the run.
        CorpusEntry entry;
        entry.name = file.filename().string();
        const EdgeListData data = load_edge_list_data(file.string());
        entry.node_count = data.node_count;
        entry.edges = data.edges;
        corpus.push_back(std::move(entry));
      }
    }

    SuiteOptions suite_options;
    suite_options.q_values = options.q_list;
    suite_options.include_lattice = options.lattice;
    suite_options.include_monte_carlo = options.monte_carlo;
    suite_options.mc_walks = options.mc_walks;
    suite_options.mc_seed = options.mc_seed;
    suite_options.node_cap = options.config.node_cap;

    const std::vector<VerificationReport> reports = run_suite(corpus, suite_options);

    if (!options.json_path.empty()) {
      std::ofstream json_out(options.json_path);
      if (!json_out) fail(errc::io_error, "cannot open " + options.json_path + " for writing");
      for (const VerificationReport& report : reports) json_out << to_json(report).dump() << "\n";
    }

    if (options.format == "json") {
      ordered_json doc = report_skeleton(options.config);
      ordered_json list = ordered_json::array();
      for (const VerificationReport& report : reports) list.push_back(to_json(report));
      doc["reports"] = std::move(list);
      doc["pass"] = suite_passed(reports);
      out << doc.dump(2) << "\n";
    } else {
      out << render_table(reports);
    }
    return suite_passed(reports) ? kExitOk : kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace subdiv

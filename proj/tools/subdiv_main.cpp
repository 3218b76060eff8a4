#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "subdiv/cli.hpp"
#include "subdiv/errors.hpp"

namespace {

subdiv::Config load_config_or_default(const std::string& path) {
  if (path.empty()) return subdiv::Config{};
  return subdiv::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra, hitting times and resistance metrics of q-subdivision graphs"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (node_cap, eig_tolerance)");

  subdiv::SubdivideOptions subdivide;
  auto* cmd_sub = app.add_subcommand("subdivide", "write S_{q,k}(G) as an edge list plus a map sidecar");
  cmd_sub->add_option("input", subdivide.input, "edge-list file")->required();
  cmd_sub->add_option("-o,--output", subdivide.output, "output edge-list file")->required();
  cmd_sub->add_option("--q", subdivide.q, "paths per edge (default 1)");
  cmd_sub->add_option("--k", subdivide.k, "iterations (default 1; 0 canonicalizes only)");
  cmd_sub->add_option("--map", subdivide.map_output, "sidecar path (default <output>.map.json)");

  subdiv::AnalyzeOptions analyze;
  std::string metrics_csv;
  auto* cmd_an = app.add_subcommand("analyze", "compute metrics of G or S_q(G)");
  cmd_an->add_option("input", analyze.input, "edge-list file")->required();
  cmd_an->add_option("--metrics", metrics_csv,
                     "comma list: kemeny,kirchhoff,additive-dk,multiplicative-dk,hitting,resistance");
  cmd_an->add_option("--method", analyze.method, "transfer | spectral | both (default spectral)");
  cmd_an->add_option("--q", analyze.q, "analyze S_q(G) instead of G");
  cmd_an->add_flag("--full-matrices", analyze.full_matrices, "emit O(n^2) hitting/resistance matrices");
  cmd_an->add_option("--format", analyze.format, "json | table (default json)");

  subdiv::LatticeOptions lattice;
  auto* cmd_lat = app.add_subcommand("lattice", "closed-form metrics of the hierarchical lattice H_{q,k}");
  cmd_lat->add_option("--q", lattice.q, "q >= 2 (default 2)");
  cmd_lat->add_option("--k", lattice.k, "iteration count (default 0)");
  cmd_lat->add_option("--table", lattice.table_max, "emit rows k=0..Kmax");
  cmd_lat->add_option("--format", lattice.format, "json | table (default json)");

  subdiv::VerifyOptions verify;
  std::string q_list_csv = "1,2,3";
  auto* cmd_ver = app.add_subcommand("verify", "run the verification suite");
  cmd_ver->add_option("--corpus", verify.corpus, "default | edge-list file | directory");
  cmd_ver->add_option("--q-list", q_list_csv, "comma list of q values (default 1,2,3)");
  cmd_ver->add_option("--json", verify.json_path, "also write JSON-lines reports here");
  cmd_ver->add_option("--format", verify.format, "table | json (default table)");
  cmd_ver->add_flag("!--no-lattice", verify.lattice, "skip the lattice closed-form cells");
  cmd_ver->add_flag("!--no-monte-carlo", verify.monte_carlo, "skip the Monte Carlo sanity cells");
  cmd_ver->add_option("--mc-walks", verify.mc_walks, "walks per Monte Carlo cell (default 100000)");
  cmd_ver->add_option("--mc-seed", verify.mc_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return subdiv::kExitUsage;
  }

  try {
    const subdiv::Config config = load_config_or_default(config_path);
    if (cmd_sub->parsed()) {
      subdivide.config = config;
      return subdiv::cmd_subdivide(subdivide, std::cerr);
    }
    if (cmd_an->parsed()) {
      analyze.config = config;
      if (!metrics_csv.empty()) {
        std::size_t start = 0;
        while (start <= metrics_csv.size()) {
          const std::size_t comma = metrics_csv.find(',', start);
          const std::string token = metrics_csv.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!token.empty()) analyze.metrics.push_back(token);
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      return subdiv::cmd_analyze(analyze, std::cout, std::cerr);
    }
    if (cmd_lat->parsed()) {
      lattice.config = config;
      return subdiv::cmd_lattice(lattice, std::cout, std::cerr);
    }
    if (cmd_ver->parsed()) {
      verify.config = config;
      verify.q_list.clear();
      std::size_t start = 0;
      while (start <= q_list_csv.size()) {
        const std::size_t comma = q_list_csv.find(',', start);
        const std::string token =
            q_list_csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!token.empty()) verify.q_list.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return subdiv::cmd_verify(verify, std::cout, std::cerr);
    }
  } catch (const subdiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return subdiv::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return subdiv::kExitUsage;
  }
  return subdiv::kExitUsage;
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subdiv/report.hpp"

namespace subdiv {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct SubdivideOptions {
  std::string input;
  std::string output;
  int q = 1;
  int k = 1;
  std::string map_output;  // defaults to <output>.map.json
  Config config;
};

/// Writes S_{q,k}(G) as an edge list plus a JSON sidecar describing the
/// last subdivision step. k=0 writes the canonicalized input unchanged.
int cmd_subdivide(const SubdivideOptions& options, std::ostream& err);

struct AnalyzeOptions {
  std::string input;
  std::vector<std::string> metrics;  // kemeny kirchhoff additive-dk multiplicative-dk hitting resistance
  std::string method = "spectral";   // spectral | transfer | both
  int q = 0;                         // 0: analyze the input graph itself
  bool full_matrices = false;
  std::string format = "json";       // json | table
  Config config;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

struct LatticeOptions {
  int q = 2;
  int k = 0;
  int table_max = -1;  // >= 0: emit rows k=0..table_max
  std::string format = "json";
  Config config;
};

int cmd_lattice(const LatticeOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string corpus = "default";  // "default", a file, or a directory
  std::vector<int> q_list = {1, 2, 3};
  std::string json_path;           // optional JSON-lines output
  std::string format = "table";
  bool lattice = true;
  bool monte_carlo = true;
  long long mc_walks = 100000;
  std::uint64_t mc_seed = 0x5eed5d1fULL;
  Config config;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace subdiv

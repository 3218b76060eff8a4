#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

/// Raw corpus entry; building (and therefore validation) happens inside the
/// suite so that bad inputs become failing reports instead of exceptions.
struct CorpusEntry {
  std::string name;
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Single edge, P3, K3, K4, C4, C5, the 4-leaf star, and the Petersen graph.
std::vector<CorpusEntry> default_corpus();

struct VerificationReport {
  std::string graph;
  int q = 0;  // 0 when the check does not involve a subdivision
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool statistical = false;  // Monte Carlo band checks; never gate the exit status
  double wall_seconds = 0.0;
  std::string note;
};

struct SuiteOptions {
  std::vector<int> q_values = {1, 2, 3};
  bool include_lattice = true;
  bool include_monte_carlo = true;
  long long mc_walks = 100000;
  std::uint64_t mc_seed = 0x5eed5d1fULL;
  int node_cap = kDefaultNodeCap;
};

/// Runs every enabled check over the corpus: spectrum/hitting/Kemeny/
/// resistance transfers against direct and oracle computations, Foster and
/// commute identities, the kernel square-sum identities, the three index
/// transfers, lattice closed forms, and the Monte Carlo sanity band.
/// Per-check failures are recorded, not thrown.
std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                          const SuiteOptions& options = {});

/// True when every non-statistical check passed.
bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace subdiv

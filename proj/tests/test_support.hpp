#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv::testing {

inline Graph single_edge() { return Graph::build(2, {{0, 1}}); }

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges);
}

inline Graph petersen() {
  return Graph::build(10, {{0, 1},
                           {1, 2},
                           {2, 3},
                           {3, 4},
                           {0, 4},
                           {0, 5},
                           {1, 6},
                           {2, 7},
                           {3, 8},
                           {4, 9},
                           {5, 7},
                           {7, 9},
                           {9, 6},
                           {6, 8},
                           {8, 5}});
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The grid corpus used throughout the cross-check tests.
inline std::vector<NamedGraph> corpus() {
  return {{"single-edge", single_edge()}, {"P3", path(3)},   {"K3", complete(3)},
          {"K4", complete(4)},            {"C4", cycle(4)},  {"C5", cycle(5)},
          {"S4-star", star(4)},           {"petersen", petersen()}};
}

/// Deterministic connected random graph: a random spanning tree plus extra
/// edges, driven by a tiny LCG so runs are reproducible.
inline Graph random_connected(int n, int extra_edges, unsigned seed) {
  unsigned state = seed * 2654435761u + 1u;
  auto next = [&state](int bound) {
    state = state * 1664525u + 1013904223u;
    return static_cast<int>((state >> 16) % static_cast<unsigned>(bound));
  };
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(next(v), v);
  int attempts = 0;
  int added = 0;
  while (added < extra_edges && attempts < 50 * extra_edges + 100) {
    ++attempts;
    const int a = next(n);
    const int b = next(n);
    if (a == b) continue;
    const auto e = std::make_pair(std::min(a, b), std::max(a, b));
    bool duplicate = false;
    for (const auto& existing : edges) {
      const auto canon = std::make_pair(std::min(existing.first, existing.second),
                                        std::max(existing.first, existing.second));
      if (canon == e) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    edges.push_back(e);
    ++added;
  }
  return Graph::build(n, edges);
}

}  // namespace subdiv::testing

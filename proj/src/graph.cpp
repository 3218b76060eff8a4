#include "subdiv/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(int node_count, const std::vector<std::pair<int, int>>& edges) {
  if (node_count < 2)
    fail(errc::invalid_argument, "graph needs at least 2 nodes, got " + std::to_string(node_count));

  Graph g;
  g.n_ = node_count;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count)
      fail(errc::index_out_of_range, "edge " + pair_str(a, b) + " outside [0," + std::to_string(node_count) + ")");
    if (a == b) fail(errc::self_loop, "edge " + pair_str(a, b));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t j = 1; j < g.edges_.size(); ++j) {
    if (g.edges_[j] == g.edges_[j - 1])
      fail(errc::duplicate_edge, "edge " + pair_str(g.edges_[j].u, g.edges_[j].v));
  }

  g.adjacency_.assign(node_count, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity: a single BFS component must cover all nodes.
  std::vector<char> seen(node_count, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : g.adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != node_count)
    fail(errc::disconnected,
         std::to_string(reached) + " of " + std::to_string(node_count) + " nodes reachable from node 0");
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Bipartition bipartition(const Graph& g) {
  const int n = g.node_count();
  Bipartition result;
  result.is_bipartite = true;
  result.color.assign(n, -1);
  std::queue<int> frontier;
  result.color[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (result.color[v] == -1) {
        result.color[v] = 1 - result.color[u];
        frontier.push(v);
      } else if (result.color[v] == result.color[u]) {
        result.is_bipartite = false;
        return result;
      }
    }
  }
  return result;
}

DenseMatrix incidence_matrix(const Graph& g) {
  DenseMatrix b(g.node_count(), g.edge_count());
  const auto& edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    b(edges[j].u, j) = 1.0;
    b(edges[j].v, j) = 1.0;
  }
  return b;
}

SubdivisionMap::SubdivisionMap(int q, int old_count, std::vector<Edge> base_edges)
    : q_(q), old_count_(old_count), base_edges_(std::move(base_edges)) {}

ParentEdge SubdivisionMap::parent(int new_node) const {
  if (new_node < old_count_ || new_node >= total_count())
    fail(errc::index_out_of_range,
         "node " + std::to_string(new_node) + " is not a new node of the subdivision");
  const int m = base_edge_count();
  const int offset = new_node - old_count_;
  const int edge_index = offset % m;
  const int copy = offset / m + 1;
  const Edge& e = base_edges_[edge_index];
  return ParentEdge{e.u, e.v, copy, edge_index};
}

std::pair<Graph, SubdivisionMap> q_subdivide(const Graph& g, int q) {
  if (q < 1) fail(errc::invalid_argument, "q must be >= 1, got " + std::to_string(q));
  const int n = g.node_count();
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(2) * m * q);
  for (int j = 0; j < m; ++j) {
    const Edge& e = g.edges()[j];
    for (int f = 1; f <= q; ++f) {
      const int x = n + (f - 1) * m + j;
      edges.emplace_back(e.u, x);
      edges.emplace_back(x, e.v);
    }
  }
  Graph s = Graph::build(n + m * q, edges);
  return {std::move(s), SubdivisionMap(q, n, g.edges())};
}

Graph iterate_subdivide(const Graph& g, int q, int k, int node_cap) {
  if (q < 1) fail(errc::invalid_argument, "q must be >= 1, got " + std::to_string(q));
  if (k < 0) fail(errc::invalid_argument, "k must be >= 0, got " + std::to_string(k));

  // Predict the final size before building anything.
  long long m_final = g.edge_count();
  long long n_final = g.node_count();
  for (int step = 0; step < k; ++step) {
    n_final += m_final * q;
    m_final *= 2LL * q;
    if (n_final > node_cap)
      fail(errc::size_limit, "iterated subdivision would reach " + std::to_string(n_final) +
                                 " nodes (cap " + std::to_string(node_cap) + ")");
  }

  Graph current = g;
  for (int step = 0; step < k; ++step) current = q_subdivide(current, q).first;

  if (current.node_count() != n_final || current.edge_count() != m_final)
    throw std::logic_error("iterate_subdivide: count law violated");
  return current;
}

}  // namespace subdiv

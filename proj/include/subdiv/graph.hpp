#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/matrix.hpp"

namespace subdiv {

/// Undirected edge stored with u < v.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph with a canonical edge ordering
/// (lexicographic on the (min,max) endpoint pairs). Immutable after
/// construction; all matrix layouts in the library derive from this
/// ordering.
class Graph {
public:
  /// Validates and canonicalizes. Throws SelfLoop, DuplicateEdge,
  /// Disconnected or IndexOutOfRange. Duplicates are an error, not a merge.
  static Graph build(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
  int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }
  bool has_edge(int u, int v) const;

private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

struct Bipartition {
  bool is_bipartite = false;
  std::vector<int> color;  // meaningful only when is_bipartite; node 0 gets 0
};

/// BFS 2-coloring; is_bipartite is false iff an odd cycle exists.
Bipartition bipartition(const Graph& g);

/// n x m node-edge incidence matrix in canonical edge order.
DenseMatrix incidence_matrix(const Graph& g);

struct ParentEdge {
  int s;           // smaller endpoint of the parent edge
  int t;           // larger endpoint
  int copy;        // in [1, q]
  int edge_index;  // in [0, m)
};

/// Bookkeeping for one q-subdivision step: which base edge and copy each
/// new node came from. New node for edge j, copy f has index
/// old_count + (f-1)*base_edge_count + j.
class SubdivisionMap {
public:
  SubdivisionMap(int q, int old_count, std::vector<Edge> base_edges);

  int q() const { return q_; }
  int old_count() const { return old_count_; }
  int base_edge_count() const { return static_cast<int>(base_edges_.size()); }
  int new_count() const { return base_edge_count() * q_; }
  int total_count() const { return old_count_ + new_count(); }
  bool is_old(int node) const { return node < old_count_; }
  const std::vector<Edge>& base_edges() const { return base_edges_; }

  /// Parent lookup for a new node; throws IndexOutOfRange for old nodes or
  /// indices outside the subdivided graph.
  ParentEdge parent(int new_node) const;

private:
  int q_;
  int old_count_;
  std::vector<Edge> base_edges_;
};

/// Replaces every edge uv by q internally disjoint paths u-x-v. The result
/// has n+mq nodes and 2mq edges and is bipartite with the old nodes on one
/// side.
std::pair<Graph, SubdivisionMap> q_subdivide(const Graph& g, int q);

inline constexpr int kDefaultNodeCap = 20000;

/// k-fold q-subdivision. Throws SizeLimit when the predicted node count
/// exceeds node_cap; the count laws m_k = (2q)^k m and
/// n_k = mq((2q)^k - 1)/(2q - 1) + n are checked on the result.
Graph iterate_subdivide(const Graph& g, int q, int k, int node_cap = kDefaultNodeCap);

/// Edge-list text format: first line "n m", then m lines "u v"
/// (0-indexed); '#' starts a comment. Parse errors carry 1-based line
/// numbers.
struct EdgeListData {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Parses without validating; Graph::build applies the graph invariants.
EdgeListData read_edge_list_data(std::istream& in);
EdgeListData load_edge_list_data(const std::string& path);

Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace subdiv

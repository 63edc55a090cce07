#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bcl/vertex_set.hpp"

namespace bcl {

/// Finite simple undirected graph on vertices 0..n-1.
/// Immutable after construction; adjacency is kept as one bit row per vertex
/// so neighborhood queries cost O(n/64) words.
class Graph {
 public:
  /// Builds the graph from an edge list. Duplicate edges collapse; self-loops
  /// and out-of-range endpoints are rejected. Requires n >= 1.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  static Graph edgeless(int n) { return Graph(n, {}); }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }

  /// N_G(v); v itself is never a member.
  const VertexSet& neighbors(int v) const;

  int degree(int v) const { return adj_[v].count(); }

  /// Edges as sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Labeled equality: same vertex count and identical edge set.
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

/// N*_G(S): vertices adjacent to every member of s. For s = {} returns all of
/// V(G) (empty-intersection convention, which keeps N* antitone).
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new index -> original vertex
};

/// Subgraph induced by a nonempty vertex set, with the relabeling map.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// One triangle's vertices (sorted), or absent if g is K3-free.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g); }

struct Bipartition {
  VertexSet a, b;
};

/// Two-coloring if one exists. Within each connected component the side
/// holding the component's smallest vertex goes to `a`; components are
/// processed in increasing order of their smallest vertex.
std::optional<Bipartition> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// G^2: same vertices, edges between vertices at distance 1 or 2.
Graph square(const Graph& g);

Graph complement(const Graph& g);

/// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace bcl

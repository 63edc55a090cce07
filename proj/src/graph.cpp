#include "bcl/graph.hpp"

#include <stdexcept>

namespace bcl {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u].add(v);
    adj_[v].add(u);
  }
  for (int v = 0; v < n; ++v) m_ += degree(v);
  m_ /= 2;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("neighbors: vertex out of range");
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet r = VertexSet::full(g.vertex_count());
  for (int v = s.first(); v >= 0; v = s.next(v)) r &= g.neighbors(v);
  return r;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> map = s.to_vector();
  std::vector<int> inverse(g.vertex_count(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < map.size(); ++i) {
    VertexSet inside = g.neighbors(map[i]) & s;
    for (int v = inside.next(map[i]); v >= 0; v = inside.next(v))
      edges.emplace_back(static_cast<int>(i), inverse[v]);
  }
  return {Graph(static_cast<int>(map.size()), edges), std::move(map)};
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (int v = nu.next(u); v >= 0; v = nu.next(v)) {
      VertexSet common = nu & g.neighbors(v);
      int w = common.next(v);
      if (w >= 0) return std::array<int, 3>{u, v, w};
    }
  }
  return std::nullopt;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  VertexSet a(n), b(n);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    a.add(start);
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      const VertexSet& nu = g.neighbors(u);
      for (int v = nu.first(); v >= 0; v = nu.next(v)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          (color[v] == 0 ? a : b).add(v);
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return Bipartition{a, b};
}

Graph square(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    VertexSet reach = g.neighbors(u);
    for (int w = reach.first(); w >= 0; w = reach.next(w))
      if (g.has_edge(u, w)) reach |= g.neighbors(w);
    reach.remove(u);
    for (int v = reach.next(u); v >= 0; v = reach.next(v)) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp(n);
    std::vector<int> queue{start};
    seen[start] = true;
    comp.add(start);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      const VertexSet& nu = g.neighbors(u);
      for (int v = nu.first(); v >= 0; v = nu.next(v)) {
        if (!seen[v]) {
          seen[v] = true;
          comp.add(v);
          queue.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace bcl

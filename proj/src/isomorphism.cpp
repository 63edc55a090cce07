#include "bcl/isomorphism.hpp"

#include <algorithm>

namespace bcl {

namespace {

std::vector<std::vector<int>> neighbor_degree_multisets(const Graph& g) {
  std::vector<std::vector<int>> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    for (int u = nv.first(); u >= 0; u = nv.next(u)) out[v].push_back(g.degree(u));
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

struct Search {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;       // g-vertices in assignment order
  std::vector<int> map;         // g-vertex -> h-vertex, -1 if unassigned
  std::vector<bool> used;       // h-vertex taken
  std::vector<std::vector<int>> sig_g, sig_h;

  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (used[v]) continue;
      if (g.degree(u) != h.degree(v) || sig_g[u] != sig_h[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (g.has_edge(u, w) != h.has_edge(map[w], v)) ok = false;
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (assign(depth + 1)) return true;
      map[u] = -1;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  std::vector<int> deg_g(n), deg_h(n);
  for (int v = 0; v < n; ++v) {
    deg_g[v] = g.degree(v);
    deg_h[v] = h.degree(v);
  }
  {
    auto a = deg_g, b = deg_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  Search s{g, h, {}, std::vector<int>(n, -1), std::vector<bool>(n, false),
           neighbor_degree_multisets(g), neighbor_degree_multisets(h)};
  {
    auto a = s.sig_g, b = s.sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Assign high-degree vertices first; ties break on index for determinism.
  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if (deg_g[a] != deg_g[b]) return deg_g[a] > deg_g[b];
    return a < b;
  });

  if (!s.assign(0)) return std::nullopt;
  return s.map;
}

}  // namespace bcl

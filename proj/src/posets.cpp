#include "bcl/posets.hpp"

#include <stdexcept>
#include <string>

namespace bcl {

Poset::Poset(int m, const std::vector<std::pair<int, int>>& relations,
             bool transitive_closure)
    : m_(m) {
  if (m < 1) throw std::invalid_argument("Poset: element count must be >= 1");
  up_.assign(m, VertexSet(m));
  for (int x = 0; x < m; ++x) up_[x].add(x);
  for (auto [u, v] : relations) {
    if (u < 0 || u >= m || v < 0 || v >= m)
      throw std::invalid_argument("Poset: relation element out of range");
    up_[u].add(v);
  }
  if (transitive_closure) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < m; ++u)
        for (int v = up_[u].first(); v >= 0; v = up_[u].next(v)) {
          VertexSet merged = up_[u] | up_[v];
          if (!(merged == up_[u])) {
            up_[u] = std::move(merged);
            changed = true;
          }
        }
    }
  }
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u != v && up_[u].contains(v) && up_[v].contains(u))
        throw std::invalid_argument("Poset: antisymmetry violated by (" +
                                    std::to_string(u) + ", " + std::to_string(v) + ")");
      if (up_[u].contains(v) && !up_[v].subset_of(up_[u])) {
        int w = (up_[v] - up_[u]).first();
        throw std::invalid_argument("Poset: transitivity violated by (" +
                                    std::to_string(u) + ", " + std::to_string(v) +
                                    ", " + std::to_string(w) + ")");
      }
    }
  down_.assign(m, VertexSet(m));
  for (int u = 0; u < m; ++u)
    for (int v = up_[u].first(); v >= 0; v = up_[u].next(v)) down_[v].add(u);
}

const VertexSet& Poset::succ_interval(int x) const {
  if (x < 0 || x >= m_) throw std::invalid_argument("succ_interval: element out of range");
  return up_[x];
}

const VertexSet& Poset::pred_interval(int x) const {
  if (x < 0 || x >= m_) throw std::invalid_argument("pred_interval: element out of range");
  return down_[x];
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < m_; ++u)
    for (int v = up_[u].first(); v >= 0; v = up_[u].next(v))
      if (u != v) out.emplace_back(u, v);
  return out;
}

std::optional<IICWitness> find_iic_violation(const Poset& p) {
  const int m = p.size();
  auto realized = [&](const VertexSet& s, bool successor) {
    for (int w = 0; w < m; ++w)
      if ((successor ? p.succ_interval(w) : p.pred_interval(w)) == s) return true;
    return false;
  };
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      VertexSet down = p.pred_interval(u) & p.pred_interval(v);
      if (!down.empty() && !realized(down, false))
        return IICWitness{IICWitness::Side::predecessor, u, v, std::move(down)};
      VertexSet up = p.succ_interval(u) & p.succ_interval(v);
      if (!up.empty() && !realized(up, true))
        return IICWitness{IICWitness::Side::successor, u, v, std::move(up)};
    }
  return std::nullopt;
}

Graph comparability_graph(const Poset& p) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : p.strict_pairs())
    if (u < v)
      edges.emplace_back(u, v);
    else
      edges.emplace_back(v, u);
  return Graph(p.size(), edges);
}

Poset biclique_poset(const Graph& g, const BicliqueFamily& family) {
  auto sides = bipartition(g);
  if (!sides) throw std::invalid_argument("biclique_poset: host graph is not bipartite");
  const int k = static_cast<int>(family.items.size());
  std::vector<VertexSet> a_part;
  a_part.reserve(k);
  for (const Biclique& b : family.items) a_part.push_back(b.union_set() & sides->a);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && a_part[i].proper_subset_of(a_part[j])) rel.emplace_back(i, j);
  return Poset(k, rel);
}

Graph pred_succ_graph(const Poset& p) {
  const int m = p.size();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u)
    for (int v = p.succ_interval(u).first(); v >= 0; v = p.succ_interval(u).next(v))
      edges.emplace_back(u, m + v);
  return Graph(2 * m, edges);
}

BicliqueFamily canonical_gp_bicliques(const Poset& p) {
  const int m = p.size();
  Graph gp = pred_succ_graph(p);
  std::vector<Biclique> items;
  for (int v = 0; v < m; ++v) {
    VertexSet x(2 * m), y(2 * m);
    const VertexSet& down = p.pred_interval(v);
    for (int u = down.first(); u >= 0; u = down.next(u)) x.add(u);
    const VertexSet& up = p.succ_interval(v);
    for (int w = up.first(); w >= 0; w = up.next(w)) y.add(m + w);
    items.push_back(Biclique::canonical(std::move(x), std::move(y)));
  }
  std::sort(items.begin(), items.end());
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i] == items[i - 1])
      throw std::logic_error("canonical_gp_bicliques: duplicate X_vY_v (antisymmetry bug)");
  BicliqueFamily family{std::move(gp), std::move(items)};
  // Re-sort into the family's canonical order (min of X_v is an a-vertex,
  // so X_v is already the canonical x side).
  std::sort(family.items.begin(), family.items.end(), family_order_less);
  return family;
}

namespace {

/// Transitive-orientation search state. dir[u*n+v] = +1 for u->v, -1 for
/// v->u, 0 undecided; entries exist only for edges of h.
struct OrientationSearch {
  const Graph& h;
  int n;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<signed char> dir;

  signed char get(int u, int v) const { return dir[u * n + v]; }
  void set(int u, int v, signed char d) {
    dir[u * n + v] = d;
    dir[v * n + u] = static_cast<signed char>(-d);
  }

  /// Sets u->v and propagates forced orientations. Records everything set
  /// into `trail`; returns false on contradiction.
  bool orient(int u, int v, std::vector<std::pair<int, int>>& trail) {
    if (get(u, v) == 1) return true;
    if (get(u, v) == -1) return false;
    set(u, v, 1);
    trail.emplace_back(u, v);
    // u->v and v->w force u->w (uw must be an edge); w->u and u->v force w->v.
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (h.has_edge(v, w) && get(v, w) == 1) {
        if (!h.has_edge(u, w) || !orient(u, w, trail)) return false;
      }
      if (h.has_edge(u, w) && get(w, u) == 1) {
        if (!h.has_edge(v, w) || !orient(w, v, trail)) return false;
      }
      // Non-edge uw with w->v forces v upstream?  No: transitivity only
      // constrains chains through decided arcs; handled symmetrically above
      // when those arcs are set.
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      auto [u, v] = trail.back();
      trail.pop_back();
      dir[u * n + v] = 0;
      dir[v * n + u] = 0;
    }
  }

  template <typename Visit>
  bool search(std::size_t next_edge, std::vector<std::pair<int, int>>& trail,
              Visit&& visit) {
    while (next_edge < edge_list.size() &&
           get(edge_list[next_edge].first, edge_list[next_edge].second) != 0)
      ++next_edge;
    if (next_edge == edge_list.size()) return visit();
    auto [u, v] = edge_list[next_edge];
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      std::size_t mark = trail.size();
      if (orient(a, b, trail) && search(next_edge + 1, trail, visit)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Poset> find_iic_orientation(const Graph& h) {
  const int n = h.vertex_count();
  if (n > 10) throw std::length_error("find_iic_orientation: refuses n > 10");
  OrientationSearch s{h, n, h.edges(), std::vector<signed char>(n * n, 0)};
  std::vector<std::pair<int, int>> trail;
  std::optional<Poset> found;
  s.search(0, trail, [&] {
    std::vector<std::pair<int, int>> rel;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (s.get(u, v) == 1) rel.emplace_back(u, v);
    Poset p(n, rel);
    if (!is_iic(p)) return false;
    found = std::move(p);
    return true;
  });
  return found;
}

}  // namespace bcl

#include "bcl/bicliques.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bcl {

namespace {

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool fully_adjacent(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (int v = x.first(); v >= 0; v = x.next(v))
    if (!y.subset_of(g.neighbors(v))) return false;
  return true;
}

/// Grows a complete bipartite pair to a maximal one, scanning vertices in
/// increasing order until a fixpoint.
void extend_to_maximal(const Graph& g, VertexSet& x, VertexSet& y) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (x.contains(v) || y.contains(v)) continue;
      const VertexSet& nv = g.neighbors(v);
      if (y.subset_of(nv) && !nv.intersects(x)) {
        x.add(v);
        changed = true;
      } else if (x.subset_of(nv) && !nv.intersects(y)) {
        y.add(v);
        changed = true;
      }
    }
  }
}

/// All maximal independent subsets of g restricted to `inside`
/// (Bron-Kerbosch with pivoting, run on the complement adjacency).
void maximal_independent_subsets(const Graph& g, const VertexSet& inside,
                                 std::vector<VertexSet>& out) {
  if (is_independent(g, inside)) {  // always taken when g is K3-free
    out.push_back(inside);
    return;
  }
  // co_adj(v) = non-neighbors of v other than v itself.
  auto co_adj = [&](int v) {
    VertexSet s = g.neighbors(v).complement();
    s.remove(v);
    return s;
  };
  struct Rec {
    const std::vector<VertexSet>& co;
    std::vector<VertexSet>& out;
    void run(VertexSet current, VertexSet candidates, VertexSet excluded) {
      if (candidates.empty() && excluded.empty()) {
        out.push_back(std::move(current));
        return;
      }
      int pivot = -1, best = -1;
      VertexSet both = candidates | excluded;
      for (int p = both.first(); p >= 0; p = both.next(p)) {
        int c = (candidates & co[p]).count();
        if (c > best) {
          best = c;
          pivot = p;
        }
      }
      VertexSet branch = candidates - co[pivot];
      for (int v = branch.first(); v >= 0; v = branch.next(v)) {
        VertexSet cur = current;
        cur.add(v);
        run(std::move(cur), candidates & co[v], excluded & co[v]);
        candidates.remove(v);
        excluded.add(v);
      }
    }
  };
  std::vector<VertexSet> co(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) co[v] = co_adj(v);
  Rec rec{co, out};
  rec.run(VertexSet(g.vertex_count()), inside, VertexSet(g.vertex_count()));
}

}  // namespace

std::string to_string(const Biclique& b) {
  return b.x.to_string() + " | " + b.y.to_string();
}

bool is_biclique(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("is_biclique: sides overlap");
  if (x.empty() || y.empty()) return false;
  if (!is_independent(g, x) || !is_independent(g, y)) return false;
  if (is_triangle_free(g))
    return common_neighborhood(g, x) == y && common_neighborhood(g, y) == x;
  if (!fully_adjacent(g, x, y)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (x.contains(v) || y.contains(v)) continue;
    const VertexSet& nv = g.neighbors(v);
    if (y.subset_of(nv) && !nv.intersects(x)) return false;
    if (x.subset_of(nv) && !nv.intersects(y)) return false;
  }
  return true;
}

bool family_order_less(const Biclique& a, const Biclique& b) {
  VertexSet ua = a.union_set(), ub = b.union_set();
  if (ua.first() != ub.first()) return ua.first() < ub.first();
  if (!(ua == ub)) return lex_less(ua, ub);
  return lex_less(a.x, b.x);
}

BicliqueFamily enumerate_bicliques(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::domain_error("enumerate_bicliques: edgeless graph has no bicliques");
  const int n = g.vertex_count();

  std::set<Biclique> pool;
  std::vector<Biclique> work;
  auto emit = [&](VertexSet core, const VertexSet& side) {
    VertexSet x = std::move(core), y = side;
    extend_to_maximal(g, x, y);
    Biclique b = Biclique::canonical(std::move(x), std::move(y));
    if (pool.insert(b).second) work.push_back(std::move(b));
  };

  std::set<VertexSet> seen_cores;
  auto expand_core = [&](const VertexSet& core) {
    if (core.empty() || !seen_cores.insert(core).second) return;
    VertexSet w = common_neighborhood(g, core);
    if (w.empty()) return;
    std::vector<VertexSet> sides;
    maximal_independent_subsets(g, w, sides);
    for (auto& s : sides) emit(core, s);
  };

  // Star seeds.
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    VertexSet core(n);
    core.add(v);
    expand_core(core);
  }

  // Consensus closure: intersect every side pair of every biclique pair.
  // Copies, not references: `work` reallocates as emit() appends.
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Biclique p = work[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Biclique q = work[j];
      for (const VertexSet* a : {&p.x, &p.y})
        for (const VertexSet* b : {&q.x, &q.y}) expand_core(*a & *b);
    }
  }

  BicliqueFamily family{g, {pool.begin(), pool.end()}};
  std::sort(family.items.begin(), family.items.end(), family_order_less);
  return family;
}

BicliqueFamily enumerate_bicliques_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw std::length_error("enumerate_bicliques_oracle: refuses n > 16");
  if (g.edge_count() == 0)
    throw std::domain_error("enumerate_bicliques_oracle: edgeless graph has no bicliques");

  std::set<Biclique> found;
  // Sweep every subset as the support, every 2-coloring of it as the sides.
  for (unsigned support = 1; support < (1u << n); ++support) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (support >> v & 1) members.push_back(v);
    const std::size_t k = members.size();
    if (k < 2) continue;
    // The smallest member stays on the x side; that halves the sweep and
    // lands directly on the canonical labeling.
    for (unsigned split = 0; split < (1u << (k - 1)); ++split) {
      VertexSet x(n), y(n);
      x.add(members[0]);
      for (std::size_t i = 1; i < k; ++i)
        (split >> (i - 1) & 1 ? y : x).add(members[i]);
      if (y.empty()) continue;
      if (!is_independent(g, x) || !is_independent(g, y)) continue;
      if (!fully_adjacent(g, x, y)) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v) {
        if (x.contains(v) || y.contains(v)) continue;
        const VertexSet& nv = g.neighbors(v);
        if ((y.subset_of(nv) && !nv.intersects(x)) ||
            (x.subset_of(nv) && !nv.intersects(y)))
          maximal = false;
      }
      if (maximal) found.insert(Biclique{std::move(x), std::move(y)});
    }
  }

  BicliqueFamily family{g, {found.begin(), found.end()}};
  std::sort(family.items.begin(), family.items.end(), family_order_less);
  return family;
}

bool mutually_included(const Biclique& p, const Biclique& q) {
  if (p == q) throw std::invalid_argument("mutually_included: identical bicliques");
  for (int labeling = 0; labeling < 2; ++labeling) {
    const VertexSet& qx = labeling == 0 ? q.x : q.y;
    const VertexSet& qy = labeling == 0 ? q.y : q.x;
    if (p.x.intersects(qy) || qx.intersects(p.y)) continue;
    if (qx.proper_subset_of(p.x) && p.y.proper_subset_of(qy)) return true;
    if (p.x.proper_subset_of(qx) && qy.proper_subset_of(p.y)) return true;
  }
  return false;
}

}  // namespace bcl

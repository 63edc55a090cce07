#include "bcl/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcl/named_graphs.hpp"

namespace bcl {

namespace {

struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::size_t limit;
  std::vector<int> map;
  std::vector<bool> used;
  std::vector<Embedding>& out;

  bool run(int u) {
    if (u == pattern.vertex_count()) {
      out.push_back(Embedding{map, EmbeddingMode::induced});
      return out.size() >= limit;
    }
    for (int v = 0; v < host.vertex_count(); ++v) {
      if (used[v] || host.degree(v) < pattern.degree(u)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        if (pattern.has_edge(u, w) != host.has_edge(v, map[w])) ok = false;
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (run(u + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::vector<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                    std::size_t limit) {
  std::vector<Embedding> out;
  if (limit == 0 || pattern.vertex_count() > host.vertex_count()) return out;
  InducedSearch s{host, pattern, limit, std::vector<int>(pattern.vertex_count(), -1),
                  std::vector<bool>(host.vertex_count(), false), out};
  s.run(0);
  return out;
}

std::optional<Embedding> find_net_star(const Graph& h) {
  for (unsigned mask = 0; mask < 8; ++mask) {
    auto hits = find_induced(h, net_star_graph(mask), 1);
    if (!hits.empty()) return hits.front();
  }
  return std::nullopt;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  struct Rec {
    const Graph& g;
    std::vector<VertexSet>& out;
    void run(VertexSet current, VertexSet candidates, VertexSet excluded) {
      if (candidates.empty() && excluded.empty()) {
        out.push_back(std::move(current));
        return;
      }
      int pivot = -1, best = -1;
      VertexSet both = candidates | excluded;
      for (int p = both.first(); p >= 0; p = both.next(p)) {
        int c = (candidates & g.neighbors(p)).count();
        if (c > best) {
          best = c;
          pivot = p;
        }
      }
      VertexSet branch = candidates - g.neighbors(pivot);
      for (int v = branch.first(); v >= 0; v = branch.next(v)) {
        VertexSet cur = current;
        cur.add(v);
        run(std::move(cur), candidates & g.neighbors(v), excluded & g.neighbors(v));
        candidates.remove(v);
        excluded.add(v);
      }
    }
  } rec{g, out};
  rec.run(VertexSet(n), VertexSet::full(n), VertexSet(n));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

/// True when every trace is a consecutive run of `order` touching an end.
bool ordering_valid(const std::vector<int>& order,
                    const std::vector<std::pair<int, VertexSet>>& traces) {
  const int k = static_cast<int>(order.size());
  for (const auto& [q, trace] : traces) {
    int lo = k, hi = -1, cnt = 0;
    for (int i = 0; i < k; ++i) {
      if (trace.contains(order[i])) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
        ++cnt;
      }
    }
    if (hi - lo + 1 != cnt) return false;             // not consecutive
    if (lo != 0 && hi != k - 1) return false;         // not anchored
  }
  return true;
}

/// Nested prefix/suffix reconstruction for cliques too large to permute.
/// Sound but incomplete: true means a valid ordering was exhibited.
bool large_clique_ordering(const std::vector<int>& members,
                           const std::vector<std::pair<int, VertexSet>>& traces) {
  const int k = static_cast<int>(members.size());
  std::vector<VertexSet> proper;
  for (const auto& [q, t] : traces)
    if (t.count() < k) proper.push_back(t);
  std::sort(proper.begin(), proper.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a < b;
  });
  proper.erase(std::unique(proper.begin(), proper.end()), proper.end());

  auto nested_in = [](const VertexSet& t, const std::vector<VertexSet>& chain) {
    for (const auto& c : chain)
      if (!t.subset_of(c) && !c.subset_of(t)) return false;
    return true;
  };

  for (bool prefer_prefix : {true, false}) {
    std::vector<VertexSet> pre, suf;
    bool consistent = true;
    for (const auto& t : proper) {
      bool can_pre = nested_in(t, pre), can_suf = nested_in(t, suf);
      if (prefer_prefix ? can_pre : (can_pre && !can_suf))
        pre.push_back(t);
      else if (can_suf)
        suf.push_back(t);
      else if (can_pre)
        pre.push_back(t);
      else {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    // Rank each member by the smallest prefix holding it (early) and the
    // smallest suffix holding it (late), then test the derived order.
    auto chain_rank = [&](const std::vector<VertexSet>& chain, int v) {
      int best = static_cast<int>(chain.size());
      for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i].contains(v)) best = std::min<int>(best, chain[i].count());
      return best;
    };
    std::vector<int> order = members;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int pa = chain_rank(pre, a), pb = chain_rank(pre, b);
      if (pa != pb) return pa < pb;
      int sa = chain_rank(suf, a), sb = chain_rank(suf, b);
      if (sa != sb) return sa > sb;
      return a < b;
    });
    if (ordering_valid(order, traces)) return true;
  }
  return false;
}

}  // namespace

CliqueOrderingResult clique_ordering_check(const Graph& h) {
  const int n = h.vertex_count();
  CliqueOrderingResult unverified;
  bool saw_unverified = false;
  for (const VertexSet& clique : maximal_cliques(h)) {
    std::vector<std::pair<int, VertexSet>> traces;
    for (int q = 0; q < n; ++q) {
      if (clique.contains(q)) continue;
      VertexSet t = h.neighbors(q) & clique;
      if (!t.empty()) traces.emplace_back(q, std::move(t));
    }
    if (traces.empty()) continue;
    std::vector<int> members = clique.to_vector();
    if (members.size() <= 8) {
      std::vector<int> order = members;
      bool found = false;
      do {
        if (ordering_valid(order, traces)) {
          found = true;
          break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      if (!found)
        return {CliqueOrderingResult::Verdict::fail, clique, std::move(traces)};
    } else if (!large_clique_ordering(members, traces)) {
      unverified = {CliqueOrderingResult::Verdict::unverified, clique, traces};
      saw_unverified = true;
    }
  }
  if (saw_unverified) return unverified;
  CliqueOrderingResult pass;
  pass.verdict = CliqueOrderingResult::Verdict::pass;
  return pass;
}

StarContainment k1n_containment_check(const Graph& h, const Graph& witness,
                                      const StarEmbedding& star) {
  if (!(square(witness) == h))
    throw std::invalid_argument("k1n_containment_check: h is not square(witness)");
  const int n = h.vertex_count();
  const int c = star.center;
  if (c < 0 || c >= n || star.leaves.empty())
    throw std::invalid_argument("k1n_containment_check: malformed star");
  for (std::size_t i = 0; i < star.leaves.size(); ++i) {
    int w = star.leaves[i];
    if (w < 0 || w >= n || w == c || !h.has_edge(c, w))
      throw std::invalid_argument("k1n_containment_check: star edges missing in h");
    for (std::size_t j = i + 1; j < star.leaves.size(); ++j)
      if (star.leaves[j] == w || h.has_edge(w, star.leaves[j]))
        throw std::invalid_argument("k1n_containment_check: star is not induced in h");
  }

  StarContainment result;
  result.center = c;
  std::vector<int> old_leaves;
  for (int w : star.leaves) {
    if (witness.has_edge(c, w))
      old_leaves.push_back(w);
    else
      result.new_leaves.push_back(w);
  }
  if (old_leaves.size() > 1) {
    result.reason = "more than one star edge already present in the witness";
    return result;
  }
  for (int w : result.new_leaves) {
    VertexSet mid = witness.neighbors(c) & witness.neighbors(w);
    if (mid.empty()) {
      result.reason = "no witness midpoint for a new star edge";
      return result;
    }
    result.midpoints.push_back(mid.first());
  }
  // Midpoints of distinct new edges cannot coincide or touch other leaves:
  // a shared midpoint would put two leaves at witness-distance two, i.e.
  // adjacent in h, contradicting the induced star.
  std::vector<int> all = result.midpoints;
  all.push_back(c);
  all.insert(all.end(), star.leaves.begin(), star.leaves.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    result.reason = "midpoint collision";
    return result;
  }
  result.ok = true;
  result.minus_variant = !old_leaves.empty();
  result.old_leaf = old_leaves.empty() ? -1 : old_leaves.front();
  return result;
}

namespace {

std::optional<Graph> root_sweep_small(const Graph& h) {
  auto edges = h.edges();
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(edges[i]);
    Graph g(h.vertex_count(), chosen);
    if (square(g) == h) return g;
  }
  return std::nullopt;
}

/// Enumerates edge subsets of h by increasing size (minimum-edge roots
/// surface first). Adding an edge can only shrink distances, so a pair
/// outside E(h) that drops to distance <= 2 prunes the whole branch.
struct RootSearch {
  const Graph& h;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> chosen;
  std::vector<VertexSet> adj;  // adjacency of the partial root
  std::optional<Graph> found;

  bool ok_to_add(int u, int v) {
    for (int x = adj[v].first(); x >= 0; x = adj[v].next(x))
      if (x != u && !h.has_edge(u, x)) return false;
    for (int x = adj[u].first(); x >= 0; x = adj[u].next(x))
      if (x != v && !h.has_edge(v, x)) return false;
    return true;
  }

  bool combos(std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      Graph g(h.vertex_count(), chosen);
      if (square(g) == h) {
        found = g;
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i + remaining <= edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (!ok_to_add(u, v)) continue;
      adj[u].add(v);
      adj[v].add(u);
      chosen.push_back(edges[i]);
      if (combos(i + 1, remaining - 1)) return true;
      chosen.pop_back();
      adj[u].remove(v);
      adj[v].remove(u);
    }
    return false;
  }
};

}  // namespace

std::optional<Graph> find_square_root(const Graph& h) {
  if (h.vertex_count() > 8)
    throw std::length_error("find_square_root: refuses n > 8");
  if (h.edge_count() <= 16) return root_sweep_small(h);
  RootSearch s{h, h.edges(), {},
               std::vector<VertexSet>(h.vertex_count(), VertexSet(h.vertex_count())),
               std::nullopt};
  for (std::size_t k = 0; k <= s.edges.size(); ++k)
    if (s.combos(0, k)) break;
  return s.found;
}

}  // namespace bcl

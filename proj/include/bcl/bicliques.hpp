#pragma once

#include <string>
#include <vector>

#include "bcl/graph.hpp"

namespace bcl {

/// Maximal induced complete bipartite subgraph of a host graph, stored as its
/// two independent sides. Canonical form keeps the smallest vertex of x ∪ y
/// on the x side.
struct Biclique {
  VertexSet x, y;

  static Biclique canonical(VertexSet a, VertexSet b) {
    int ma = a.first(), mb = b.first();
    if (mb >= 0 && (ma < 0 || mb < ma)) std::swap(a, b);
    return Biclique{std::move(a), std::move(b)};
  }

  VertexSet union_set() const { return x | y; }

  bool operator==(const Biclique& o) const { return x == o.x && y == o.y; }
  bool operator<(const Biclique& o) const {
    if (!(x == o.x)) return x < o.x;
    return y < o.y;
  }
};

/// "x side | y side", e.g. "0 2 | 1".
std::string to_string(const Biclique& b);

/// Canonical family order: (smallest vertex of x ∪ y, then x ∪ y as a
/// sorted list, then x).
bool family_order_less(const Biclique& a, const Biclique& b);

/// All bicliques of a host graph in canonical order: sorted by
/// (smallest vertex of x ∪ y, then x ∪ y as a sorted list, then x).
/// The list index of a biclique is its vertex number in KB(G) and KB_m(G).
struct BicliqueFamily {
  Graph host;
  std::vector<Biclique> items;

  bool operator==(const BicliqueFamily& o) const {
    return host == o.host && items == o.items;
  }
};

/// True iff (x, y) is a biclique of g. Overlapping sides are an input error.
/// Triangle-free hosts use the common-neighborhood characterization
/// (N*(x) = y and N*(y) = x); general hosts use the definitional
/// independence + completeness + unextendability check.
bool is_biclique(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Enumerates every biclique of g exactly once.
///
/// Consensus-style expansion: star seeds reduced to maximal complete
/// bipartite pairs, then closed under side-intersection and greedy side
/// extension until fixpoint. An edgeless graph has no bicliques (both sides
/// must be nonempty) and is a domain error.
BicliqueFamily enumerate_bicliques(const Graph& g);

/// Brute-force reference enumerator: sweeps all assignments of vertices to
/// (x side, y side, outside) and keeps the valid maximal pairs. Test oracle
/// only; refuses hosts with more than 16 vertices.
BicliqueFamily enumerate_bicliques_oracle(const Graph& g);

/// Mutual inclusion: some labeling of q's sides keeps the cross sides
/// disjoint from p's and nests one side pair each way, properly.
/// Both bicliques must live on the same host; p == q is an input error.
bool mutually_included(const Biclique& p, const Biclique& q);

}  // namespace bcl

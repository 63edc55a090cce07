#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bcl/bicliques.hpp"
#include "bcl/graph.hpp"

namespace bcl {

/// Partially ordered set on elements 0..m-1, stored as interval bit rows.
/// Construction validates reflexivity, antisymmetry and transitivity and
/// reports the offending pair/triple otherwise.
class Poset {
 public:
  /// From the strict or non-strict relation pairs (u, v) meaning u <= v.
  /// With `transitive_closure` the closure is taken before validation, so
  /// covering-pair input works; antisymmetry violations still throw.
  Poset(int m, const std::vector<std::pair<int, int>>& relations,
        bool transitive_closure = false);

  int size() const { return m_; }
  bool leq(int u, int v) const { return up_[u].contains(v); }

  /// I+(x) = {y : x <= y}. Contains x.
  const VertexSet& succ_interval(int x) const;
  /// I-(x) = {y : y <= x}. Contains x.
  const VertexSet& pred_interval(int x) const;

  /// Strict comparable pairs (u, v), u <= v, u != v, sorted.
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const Poset& o) const { return m_ == o.m_ && up_ == o.up_; }

 private:
  int m_ = 0;
  std::vector<VertexSet> up_, down_;
};

/// Interval-intersection-closure failure: the pair (u, v) whose predecessor
/// (or successor) intervals meet in a set realized by no element.
struct IICWitness {
  enum class Side { predecessor, successor };
  Side side;
  int u, v;
  VertexSet intersection;
};

/// Absent iff every nonempty pairwise intersection of predecessor intervals
/// is itself a predecessor interval, and likewise for successor intervals.
std::optional<IICWitness> find_iic_violation(const Poset& p);

inline bool is_iic(const Poset& p) { return !find_iic_violation(p); }

/// Edge uv iff u != v and u, v comparable.
Graph comparability_graph(const Poset& p);

/// The biclique order of a bipartite graph: elements are family indices,
/// i <= j iff i = j or (items[i] ∩ A) ⊂ (items[j] ∩ A), with A the side
/// produced by bipartition(g). Non-bipartite hosts are an input error.
Poset biclique_poset(const Graph& g, const BicliqueFamily& family);

/// Predecessors-successors bipartite graph G_P on 2m vertices:
/// a_v = v, b_v = m + v, with a_u ~ b_v iff u <= v.
Graph pred_succ_graph(const Poset& p);

/// The bicliques {X_v Y_v} of G_P, where X_v = {a_u : u in I-(v)} and
/// Y_v = {b_w : w in I+(v)}. One per element; distinctness is enforced.
BicliqueFamily canonical_gp_bicliques(const Poset& p);

/// Searches the transitive orientations of h (edge backtracking with
/// immediate transitivity propagation) for one whose poset is IIC.
/// Returns that poset, or absent once every orientation is exhausted —
/// which certifies that h is not an IIC-comparability graph.
/// Refuses h with more than 10 vertices.
std::optional<Poset> find_iic_orientation(const Graph& h);

inline bool is_iic_comparability(const Graph& h) {
  return find_iic_orientation(h).has_value();
}

}  // namespace bcl

#pragma once

#include <optional>
#include <vector>

#include "bcl/graph.hpp"

namespace bcl {

/// Edge-preserving bijection from g's vertices onto h's (map[u_g] = v_h), or
/// absent when the graphs are not isomorphic. Deterministic given the inputs.
/// Backtracking with degree and neighbor-degree-multiset pruning; intended
/// for small graphs (roughly n <= 12).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace bcl

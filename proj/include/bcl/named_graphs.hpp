#pragma once

#include <optional>
#include <string>

#include "bcl/graph.hpp"

namespace bcl {

Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n}: center 0, leaves 1..n.
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// Triangle 0,1,2 with a pendant vertex 3,4,5 on each corner (edge i -- i+3).
Graph net_graph();

/// Net plus the optional edges among the pendant vertices selected by a
/// 3-bit mask: bit 0 = {3,4}, bit 1 = {3,5}, bit 2 = {4,5}.
Graph net_star_graph(unsigned mask);

/// The 2x3 grid graph on vertices 0..5 (rows {0,1,2} / {3,4,5}).
Graph domino_graph();
/// Complement of the domino.
Graph co_domino_graph();

/// C4 on 0..3 plus hub 4.
Graph wheel4_graph();
/// K4 minus the edge {2,3}.
Graph diamond_graph();
/// Apex 0 joined to the path 1-2-3-4.
Graph fan3_graph();

/// Spider D_n: center 0, middle vertices 1..n, tips n+1..2n,
/// edges {0,i} and {i, n+i}.
Graph d_graph(int n);
/// D_n minus its last tip.
Graph d_minus_graph(int n);

/// Dispatch by name: path, cycle, star, complete, net, net_star, domino,
/// co_domino, wheel4, diamond, fan3, D, D_minus, K1n. `parameter` is the
/// size/mask where applicable. Unknown names or bad parameters are input
/// errors.
Graph named_graph(const std::string& name, std::optional<int> parameter = std::nullopt);

}  // namespace bcl

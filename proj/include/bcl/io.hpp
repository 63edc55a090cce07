#pragma once

#include <string>
#include <vector>

#include "bcl/graph.hpp"
#include "bcl/posets.hpp"

namespace bcl {

/// Parses the edge-list format: first non-comment line "n m", then m lines
/// "u v"; '#' starts a comment, blank lines are ignored. A line starting
/// with ">>graph6<<" or consisting of graph6-alphabet bytes is decoded as
/// graph6 instead. Errors (malformed header, out-of-range endpoint,
/// duplicate edge, self-loop) carry the offending line number.
Graph parse_graph(const std::string& text);

Graph parse_graph_file(const std::string& path);

/// Canonical edge-list rendering: "n m\n" then sorted "u v" lines.
/// parse_graph(render_graph(g)) == g, bit-exact.
std::string render_graph(const Graph& g);

/// Decodes one graph6 value (with or without the ">>graph6<<" prefix).
Graph parse_graph6(const std::string& line);

/// Poset text: first line m, then one "u v" line per comparable or covering
/// pair (u <= v). The transitive closure is applied on load; closures that
/// break antisymmetry are input errors.
Poset parse_poset(const std::string& text);

Poset parse_poset_file(const std::string& path);

/// All strict comparable pairs, closure-stable: parse(render(p)) == p.
std::string render_poset(const Poset& p);

/// DOT rendering. When labels are given there must be one per vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace bcl

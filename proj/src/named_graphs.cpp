#include "bcl/named_graphs.hpp"

#include <stdexcept>

namespace bcl {

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star_graph: need >= 1 leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph net_graph() { return net_star_graph(0); }

Graph net_star_graph(unsigned mask) {
  if (mask > 7) throw std::invalid_argument("net_star_graph: mask must be in 0..7");
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
  if (mask & 1u) e.emplace_back(3, 4);
  if (mask & 2u) e.emplace_back(3, 5);
  if (mask & 4u) e.emplace_back(4, 5);
  return Graph(6, e);
}

Graph domino_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph co_domino_graph() { return complement(domino_graph()); }

Graph wheel4_graph() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

Graph diamond_graph() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph fan3_graph() {
  return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}

Graph d_graph(int n) {
  if (n < 1) throw std::invalid_argument("d_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, n + i);
  }
  return Graph(2 * n + 1, e);
}

Graph d_minus_graph(int n) {
  if (n < 1) throw std::invalid_argument("d_minus_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  for (int i = 1; i < n; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, e);
}

Graph named_graph(const std::string& name, std::optional<int> parameter) {
  auto need = [&](const char* what) -> int {
    if (!parameter) throw std::invalid_argument(std::string("named_graph: '") + name +
                                                "' needs a parameter (" + what + ")");
    return *parameter;
  };
  if (name == "path") return path_graph(need("length"));
  if (name == "cycle") return cycle_graph(need("length"));
  if (name == "star" || name == "K1n") return star_graph(need("leaves"));
  if (name == "complete") return complete_graph(need("size"));
  if (name == "net") return net_graph();
  if (name == "net_star") return net_star_graph(static_cast<unsigned>(need("mask")));
  if (name == "domino") return domino_graph();
  if (name == "co_domino") return co_domino_graph();
  if (name == "wheel4") return wheel4_graph();
  if (name == "diamond") return diamond_graph();
  if (name == "fan3") return fan3_graph();
  if (name == "D") return d_graph(need("legs"));
  if (name == "D_minus") return d_minus_graph(need("legs"));
  throw std::invalid_argument("named_graph: unknown graph name '" + name + "'");
}

}  // namespace bcl

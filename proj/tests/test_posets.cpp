#include <doctest.h>

#include "bcl/generators.hpp"
#include "bcl/isomorphism.hpp"
#include "bcl/named_graphs.hpp"
#include "bcl/operators.hpp"
#include "bcl/posets.hpp"

using namespace bcl;

namespace {

Poset chain(int m) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < m; ++i) rel.emplace_back(i, i + 1);
  return Poset(m, rel, true);
}

Poset antichain(int m) { return Poset(m, {}); }

// c below a and b: a=0, b=1, c=2.
Poset v_poset() { return Poset(3, {{2, 0}, {2, 1}}); }

// 2+2 crown: 0, 1 both below 2, 3.
Poset crown22() { return Poset(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);   // antisymmetry
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}}), std::invalid_argument);   // transitivity
  CHECK_NOTHROW(Poset(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_NOTHROW(Poset(3, {{0, 1}, {1, 2}}, true));  // closure on load
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}, true), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(0, {}), std::invalid_argument);
}

TEST_CASE("intervals") {
  Poset c = chain(3);
  CHECK(c.pred_interval(1) == VertexSet::of(3, {0, 1}));
  CHECK(c.succ_interval(1) == VertexSet::of(3, {1, 2}));

  Poset a = antichain(3);
  CHECK(a.pred_interval(0) == VertexSet::of(3, {0}));
  CHECK(a.succ_interval(0) == VertexSet::of(3, {0}));

  CHECK(v_poset().succ_interval(2) == VertexSet::of(3, {0, 1, 2}));
  CHECK_THROWS_AS(c.pred_interval(3), std::invalid_argument);
}

TEST_CASE("interval intersection closure") {
  CHECK(is_iic(chain(4)));
  CHECK(is_iic(antichain(3)));
  CHECK(is_iic(v_poset()));

  auto witness = find_iic_violation(crown22());
  REQUIRE(witness.has_value());
  CHECK(witness->side == IICWitness::Side::successor);
  CHECK(witness->u == 0);
  CHECK(witness->v == 1);
  CHECK(witness->intersection == VertexSet::of(4, {2, 3}));
}

TEST_CASE("comparability graphs") {
  CHECK(comparability_graph(chain(3)) == complete_graph(3));
  CHECK(comparability_graph(antichain(3)) == Graph::edgeless(3));
  CHECK(comparability_graph(crown22()) ==
        Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("biclique poset of bipartite graphs") {
  {
    Graph g = path_graph(4);
    auto family = enumerate_bicliques(g);
    Poset p = biclique_poset(g, family);
    // Family order: [{0 2 | 1}, {1 3 | 2}]; A side = {0, 2}.
    // The second biclique's A part {2} sits below the first's {0, 2}.
    CHECK(p.leq(1, 0));
    CHECK_FALSE(p.leq(0, 1));
  }
  {
    Graph g = cycle_graph(4);
    Poset p = biclique_poset(g, enumerate_bicliques(g));
    CHECK(p.size() == 1);
  }
  {
    Graph g(4, {{0, 1}, {2, 3}});
    Poset p = biclique_poset(g, enumerate_bicliques(g));
    CHECK(p.size() == 2);
    CHECK_FALSE(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
  }
  Graph odd = cycle_graph(5);
  CHECK_THROWS_AS(biclique_poset(odd, enumerate_bicliques(odd)), std::invalid_argument);
}

TEST_CASE("predecessors-successors graph") {
  Graph p4 = pred_succ_graph(chain(2));
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(isomorphic(p4, path_graph(4)));

  Graph matching = pred_succ_graph(antichain(2));
  CHECK(matching.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  Graph v = pred_succ_graph(v_poset());
  CHECK(v.vertex_count() == 6);
  CHECK(v.edge_count() == 5);
  CHECK(is_bipartite(v));
}

TEST_CASE("canonical bicliques of the predecessors-successors graph") {
  auto two = canonical_gp_bicliques(chain(2));
  REQUIRE(two.items.size() == 2);
  // Family order sorts by union: {0,1,3} precedes {0,2,3}.
  CHECK(two.items[0] == Biclique{VertexSet::of(4, {0, 1}), VertexSet::of(4, {3})});
  CHECK(two.items[1] == Biclique{VertexSet::of(4, {0}), VertexSet::of(4, {2, 3})});

  auto pair = canonical_gp_bicliques(antichain(2));
  REQUIRE(pair.items.size() == 2);
  CHECK(pair.items[0] == Biclique{VertexSet::of(4, {0}), VertexSet::of(4, {2})});
  CHECK(pair.items[1] == Biclique{VertexSet::of(4, {1}), VertexSet::of(4, {3})});

  CHECK(canonical_gp_bicliques(v_poset()).items.size() == 3);
}

TEST_CASE("IIC posets: G_P bicliques are exactly the canonical ones") {
  for (int m = 1; m <= 4; ++m)
    for (const Poset& p : exhaustive_posets(m)) {
      if (!is_iic(p)) continue;
      auto canon = canonical_gp_bicliques(p);
      auto found = enumerate_bicliques(canon.host);
      CHECK(found.items == canon.items);
    }
}

TEST_CASE("IIC posets up to 6 elements: both G_P results, one pass") {
  for (int m = 5; m <= 6; ++m)
    for (const Poset& p : exhaustive_posets(m)) {
      if (!is_iic(p)) continue;
      auto canon = canonical_gp_bicliques(p);
      auto found = enumerate_bicliques(canon.host);
      REQUIRE(found.items == canon.items);
      // v -> X_vY_v carries comparability onto kbm(G_P).
      Graph comp = comparability_graph(p);
      Graph kbm_gp = kbm(found).graph;
      std::vector<int> phi(m, -1);
      for (int v = 0; v < m; ++v) {
        VertexSet x(2 * m), y(2 * m);
        for (int u = p.pred_interval(v).first(); u >= 0; u = p.pred_interval(v).next(u))
          x.add(u);
        for (int w = p.succ_interval(v).first(); w >= 0; w = p.succ_interval(v).next(w))
          y.add(m + w);
        Biclique target{x, y};
        for (std::size_t i = 0; i < found.items.size(); ++i)
          if (found.items[i] == target) phi[v] = static_cast<int>(i);
        REQUIRE(phi[v] >= 0);
      }
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
          CHECK(comp.has_edge(u, v) == kbm_gp.has_edge(phi[u], phi[v]));
    }
}

TEST_CASE("non-IIC negative control: the crown's G_P has an extra biclique") {
  Poset p = crown22();
  auto canon = canonical_gp_bicliques(p);
  auto found = enumerate_bicliques(canon.host);
  CHECK(found.items.size() == canon.items.size() + 1);
  Biclique extra{VertexSet::of(8, {0, 1}), VertexSet::of(8, {6, 7})};
  bool in_found = false, in_canon = false;
  for (const Biclique& b : found.items)
    if (b == extra) in_found = true;
  for (const Biclique& b : canon.items)
    if (b == extra) in_canon = true;
  CHECK(in_found);
  CHECK_FALSE(in_canon);
}

TEST_CASE("element-to-biclique map is an isomorphism onto kbm of G_P") {
  for (int m = 1; m <= 4; ++m)
    for (const Poset& p : exhaustive_posets(m)) {
      if (!is_iic(p)) continue;
      auto fam = enumerate_bicliques(pred_succ_graph(p));
      Graph comp = comparability_graph(p);
      Graph kbm_gp = kbm(fam).graph;
      Graph kb_gp = kb(fam).graph;
      Graph comp_sq = square(comp);
      // phi maps element v to the family position of X_vY_v.
      std::vector<int> phi(m, -1);
      for (int v = 0; v < m; ++v) {
        VertexSet x(2 * m), y(2 * m);
        for (int u = p.pred_interval(v).first(); u >= 0; u = p.pred_interval(v).next(u))
          x.add(u);
        for (int w = p.succ_interval(v).first(); w >= 0; w = p.succ_interval(v).next(w))
          y.add(m + w);
        Biclique target{x, y};
        for (std::size_t i = 0; i < fam.items.size(); ++i)
          if (fam.items[i] == target) phi[v] = static_cast<int>(i);
        REQUIRE(phi[v] >= 0);
      }
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
          CHECK(comp.has_edge(u, v) == kbm_gp.has_edge(phi[u], phi[v]));
          CHECK(comp_sq.has_edge(u, v) == kb_gp.has_edge(phi[u], phi[v]));
        }
    }
}

TEST_CASE("bipartite graphs: comparability of the biclique poset is kbm") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {true, true, false})) {
      if (g.edge_count() == 0) continue;
      auto family = enumerate_bicliques(g);
      Poset p = biclique_poset(g, family);
      CHECK(comparability_graph(p) == kbm(family).graph);
      CHECK(is_iic(p));
    }
}

TEST_CASE("IIC-comparability recognition") {
  auto k2 = find_iic_orientation(path_graph(2));
  REQUIRE(k2.has_value());
  CHECK(k2->leq(0, 1));

  auto k3 = find_iic_orientation(complete_graph(3));
  REQUIRE(k3.has_value());
  // Chain: totally ordered.
  int comparable = 0;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v && k3->leq(u, v)) ++comparable;
  CHECK(comparable == 3);

  CHECK_FALSE(find_iic_orientation(cycle_graph(4)).has_value());
  // An odd cycle is not even a comparability graph.
  CHECK_FALSE(find_iic_orientation(cycle_graph(5)).has_value());
  // Edgeless graphs orient trivially to antichains.
  CHECK(find_iic_orientation(Graph::edgeless(4)).has_value());

  CHECK_THROWS_AS(find_iic_orientation(complete_graph(11)), std::length_error);
}

TEST_CASE("recognition is consistent with the bipartite characterization") {
  // KBm of a bipartite graph is IIC-comparability, so recognition must
  // accept it.
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {true, true, false})) {
      if (g.edge_count() == 0) continue;
      Graph h = kbm(g).graph;
      if (h.vertex_count() > 10) continue;
      CHECK(find_iic_orientation(h).has_value());
    }
}

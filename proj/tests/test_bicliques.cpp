#include <doctest.h>

#include <random>

#include "bcl/bicliques.hpp"
#include "bcl/generators.hpp"
#include "bcl/named_graphs.hpp"
#include "bcl/operators.hpp"
#include "oracles.hpp"

using namespace bcl;

namespace {

Biclique bc(int n, std::initializer_list<int> x, std::initializer_list<int> y) {
  return Biclique{VertexSet::of(n, x), VertexSet::of(n, y)};
}

}  // namespace

TEST_CASE("oracle on tiny graphs") {
  auto star = enumerate_bicliques_oracle(star_graph(3));
  REQUIRE(star.items.size() == 1);
  CHECK(star.items[0] == bc(4, {0}, {1, 2, 3}));

  auto edge = enumerate_bicliques_oracle(path_graph(2));
  REQUIRE(edge.items.size() == 1);
  CHECK(edge.items[0] == bc(2, {0}, {1}));

  auto c4 = enumerate_bicliques_oracle(cycle_graph(4));
  REQUIRE(c4.items.size() == 1);
  CHECK(c4.items[0] == bc(4, {0, 2}, {1, 3}));

  CHECK_THROWS_AS(enumerate_bicliques_oracle(path_graph(17)), std::length_error);
  CHECK_THROWS_AS(enumerate_bicliques_oracle(Graph::edgeless(3)), std::domain_error);
}

TEST_CASE("enumeration on the worked examples") {
  auto c4 = enumerate_bicliques(cycle_graph(4));
  REQUIRE(c4.items.size() == 1);
  CHECK(c4.items[0] == bc(4, {0, 2}, {1, 3}));

  auto p4 = enumerate_bicliques(path_graph(4));
  REQUIRE(p4.items.size() == 2);
  CHECK(p4.items[0] == bc(4, {0, 2}, {1}));
  CHECK(p4.items[1] == bc(4, {1, 3}, {2}));

  auto c5 = enumerate_bicliques(cycle_graph(5));
  REQUIRE(c5.items.size() == 5);
  CHECK(c5.items[0] == bc(5, {0, 2}, {1}));
  CHECK(c5.items[1] == bc(5, {0}, {1, 4}));
  CHECK(c5.items[2] == bc(5, {0, 3}, {4}));
  CHECK(c5.items[3] == bc(5, {1, 3}, {2}));
  CHECK(c5.items[4] == bc(5, {2, 4}, {3}));

  CHECK(enumerate_bicliques(co_domino_graph()).items.size() == 5);

  CHECK_THROWS_AS(enumerate_bicliques(Graph::edgeless(2)), std::domain_error);
}

TEST_CASE("biclique string form") {
  CHECK(to_string(bc(4, {0, 2}, {1})) == "0 2 | 1");
}

TEST_CASE("is_biclique") {
  Graph c4 = cycle_graph(4);
  CHECK(is_biclique(c4, VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})));
  CHECK_FALSE(is_biclique(c4, VertexSet::of(4, {0}), VertexSet::of(4, {1, 3})));
  CHECK(is_biclique(path_graph(4), VertexSet::of(4, {0, 2}), VertexSet::of(4, {1})));
  CHECK_FALSE(is_biclique(c4, VertexSet(4), VertexSet::of(4, {1})));
  CHECK_THROWS_AS(is_biclique(c4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 3})),
                  std::invalid_argument);
  // A complete bipartite pair that extends is not a biclique; on a host with
  // triangles the definitional route is taken.
  Graph co = co_domino_graph();
  CHECK(is_biclique(co, VertexSet::of(6, {0, 1}), VertexSet::of(6, {5})));
  CHECK_FALSE(is_biclique(co, VertexSet::of(6, {0}), VertexSet::of(6, {5})));
}

TEST_CASE("enumeration matches the oracle exhaustively to 6 and on random 8/9") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n)) {
      if (g.edge_count() == 0) continue;
      CAPTURE(n);
      CHECK(enumerate_bicliques(g).items == enumerate_bicliques_oracle(g).items);
    }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial)
    for (int n : {8, 9}) {
      Graph g = random_gnp(n, 0.4, rng);
      if (g.edge_count() == 0) continue;
      CHECK(enumerate_bicliques(g).items == enumerate_bicliques_oracle(g).items);
    }
}

TEST_CASE("triangle-free hosts: both common-neighborhood closures hold") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {false, false, true})) {
      if (g.edge_count() == 0) continue;
      for (const Biclique& b : enumerate_bicliques(g).items) {
        CHECK(common_neighborhood(g, b.x) == b.y);
        CHECK(common_neighborhood(g, b.y) == b.x);
      }
    }
}

TEST_CASE("triangle-free hosts: side intersections reproduce bicliques") {
  // Any nonempty intersection of sides of two bicliques is again the side of
  // a biclique whose other side covers both opposite sides.
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {false, false, true})) {
      if (g.edge_count() == 0) continue;
      auto family = enumerate_bicliques(g);
      for (const Biclique& p : family.items)
        for (const Biclique& q : family.items)
          for (const VertexSet* a : {&p.x, &p.y})
            for (const VertexSet* b : {&q.x, &q.y}) {
              VertexSet core = *a & *b;
              if (core.empty()) continue;
              VertexSet other = common_neighborhood(g, core);
              Biclique r = Biclique::canonical(core, other);
              bool present = false;
              for (const Biclique& f : family.items)
                if (f == r) {
                  present = true;
                  break;
                }
              CHECK(present);
              const VertexSet& pa = (a == &p.x) ? p.y : p.x;
              const VertexSet& qb = (b == &q.x) ? q.y : q.x;
              CHECK(pa.subset_of(other));
              CHECK(qb.subset_of(other));
            }
    }
}

TEST_CASE("mutual inclusion on the worked examples") {
  auto c5 = enumerate_bicliques(cycle_graph(5)).items;
  // Canonical order: [{0 2|1}, {0|1 4}, {0 3|4}, {1 3|2}, {2 4|3}].
  const Biclique& b0 = c5[1];  // {0 | 1 4}
  const Biclique& b1 = c5[0];  // {0 2 | 1}
  const Biclique& b2 = c5[3];  // {1 3 | 2}
  CHECK(mutually_included(b0, b1));
  CHECK_FALSE(mutually_included(b0, b2));

  auto p4 = enumerate_bicliques(path_graph(4)).items;
  CHECK(mutually_included(p4[0], p4[1]));

  CHECK_THROWS_AS(mutually_included(b0, b0), std::invalid_argument);
}

TEST_CASE("mutual inclusion is symmetric") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {true, false, false})) {
      if (g.edge_count() == 0) continue;
      auto items = enumerate_bicliques(g).items;
      for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
          CHECK(mutually_included(items[i], items[j]) ==
                mutually_included(items[j], items[i]));
    }
}

TEST_CASE("pairwise mutually included families nest") {
  // Every clique of KBm admits side labelings under which sorting by |x|
  // gives strictly nested x sides one way and y sides the other way.
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : exhaustive_graphs(n, {true, false, true})) {
      if (g.edge_count() == 0) continue;
      auto family = enumerate_bicliques(g);
      auto result = kbm(family);
      const auto& items = family.items;
      const int k = static_cast<int>(items.size());
      // Collect the vertex sets of maximal cliques of KBm by brute force
      // over subsets (k is small here).
      for (unsigned subset = 1; subset < (1u << k); ++subset) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
          if (subset >> i & 1) members.push_back(i);
        if (members.size() < 2) continue;
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!result.graph.has_edge(members[i], members[j])) {
              clique = false;
              break;
            }
        if (!clique) continue;
        bool ordered = false;
        for (unsigned flips = 0; flips < (1u << members.size()) && !ordered; ++flips) {
          std::vector<std::pair<VertexSet, VertexSet>> labeled;
          for (std::size_t i = 0; i < members.size(); ++i) {
            const Biclique& b = items[members[i]];
            if (flips >> i & 1)
              labeled.emplace_back(b.y, b.x);
            else
              labeled.emplace_back(b.x, b.y);
          }
          std::sort(labeled.begin(), labeled.end(),
                    [](const auto& a, const auto& b) {
                      return a.first.count() < b.first.count();
                    });
          bool chain = true;
          for (std::size_t i = 0; i + 1 < labeled.size() && chain; ++i)
            if (!labeled[i].first.proper_subset_of(labeled[i + 1].first) ||
                !labeled[i + 1].second.proper_subset_of(labeled[i].second))
              chain = false;
          ordered = chain;
        }
        CHECK(ordered);
      }
    }
}

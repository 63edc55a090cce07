#include <doctest.h>

#include <atomic>

#include <json.hpp>

#include "bcl/harness.hpp"
#include "bcl/io.hpp"
#include "bcl/named_graphs.hpp"

using namespace bcl;

TEST_CASE("worker pool") {
  CHECK(worker_count() >= 1);
  std::atomic<long long> sum{0};
  parallel_for(1000, [&](std::size_t i) { sum += static_cast<long long>(i); });
  CHECK(sum == 999 * 1000 / 2);
  parallel_for(0, [&](std::size_t) { sum = -1; });
  CHECK(sum == 999 * 1000 / 2);
  CHECK_THROWS_AS(
      parallel_for(64, [](std::size_t i) { if (i == 13) throw std::runtime_error("boom"); }),
      std::runtime_error);
}

TEST_CASE("per-instance predicates accept known-good inputs") {
  CHECK_FALSE(kbm_square_violation(cycle_graph(5)).has_value());
  CHECK_FALSE(kbm_square_violation(path_graph(4)).has_value());
  CHECK_FALSE(netstar_violation(net_graph()).has_value());
  CHECK_FALSE(netstar_violation(path_graph(2)).has_value());
  CHECK_FALSE(clique_ordering_violation(cycle_graph(6)).has_value());
  CHECK_FALSE(star_containment_violation(cycle_graph(6), 2).has_value());
  CHECK_FALSE(independent_union_violation(cycle_graph(8)).has_value());
  CHECK_FALSE(equal_neighborhood_violation(cycle_graph(7)).has_value());
  CHECK_FALSE(bipartite_forward_violation(path_graph(4)).has_value());
  CHECK_FALSE(bipartite_forward_violation(cycle_graph(4)).has_value());
  Poset chain2(2, {{0, 1}});
  CHECK_FALSE(bipartite_reverse_violation(chain2).has_value());
  Poset anti2(2, {});
  CHECK_FALSE(bipartite_reverse_violation(anti2).has_value());
}

TEST_CASE("a violating input produces a replayable failure") {
  // The co-domino has triangles, so the square identity is not promised for
  // it; its KB image (the 4-wheel) is not even a square. Feeding it to the
  // predicate directly exercises the witness path.
  Graph g = co_domino_graph();
  auto witness = kbm_square_violation(g);
  REQUIRE(witness.has_value());
  CHECK_FALSE(witness->empty());

  // Replay from the serialized instance alone.
  Graph replayed = parse_graph(render_graph(g));
  auto again = kbm_square_violation(replayed);
  REQUIRE(again.has_value());
  CHECK(*again == *witness);
}

TEST_CASE("checker aggregation keeps the count ledger") {
  auto spec = InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 5);
  auto report = check_kbm_square(spec);
  CHECK(report.check == "kbm_square");
  CHECK(report.generated == 1 + 1 + 2 + 6 + 21);
  CHECK(report.checked + report.skipped == report.generated);
  CHECK(report.skipped > 0);  // K1 plus every graph with a triangle
  CHECK(report.pass());
  CHECK(report.elapsed_ms >= 0.0);
}

TEST_CASE("reports are deterministic and exclude timing") {
  auto spec = InstanceSpec::random(InstanceKind::random_triangle_free, 9, 0.3, 40, 17);
  auto a = check_kbm_square(spec);
  auto b = check_kbm_square(spec);
  CHECK(a.to_record() == b.to_record());

  auto j = nlohmann::json::parse(a.to_record());
  CHECK(j["check"] == "kbm_square");
  CHECK(j["generated"] == 40);
  CHECK(j.contains("spec"));
  CHECK(j.contains("failures"));
  CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("small checker runs pass") {
  CHECK(check_netstar_free(InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 5))
            .pass());
  CHECK(check_clique_ordering(InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 5))
            .pass());
  CHECK(check_star_containment(
            InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 6), 3)
            .pass());
  CHECK(check_star_containment(
            InstanceSpec::random(InstanceKind::random_triangle_free, 10, 0.3, 20, 11), 3)
            .pass());
  CHECK(check_independent_union(
            InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 6))
            .pass());
  CHECK(check_equal_neighborhoods(
            InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 6))
            .pass());
  CHECK(check_bipartite_forward(
            InstanceSpec::exhaustive(InstanceKind::exhaustive_bipartite, 6))
            .pass());
  auto reverse = check_bipartite_reverse(
      InstanceSpec::exhaustive(InstanceKind::exhaustive_posets, 4));
  CHECK(reverse.pass());
  CHECK(reverse.skipped > 0);  // non-IIC posets
  CHECK(check_separating_examples().pass());
}

TEST_CASE("random-kind checkers skip out-of-scope instances") {
  // Plain G(n,p) streams contain graphs with triangles; the triangle-free
  // hypothesis filters them out as skips, never failures.
  auto spec = InstanceSpec::random(InstanceKind::random_gnp, 8, 0.5, 30, 3);
  auto report = check_kbm_square(spec);
  CHECK(report.pass());
  CHECK(report.skipped > 0);
  CHECK(report.checked + report.skipped == 30);
}

TEST_CASE("checker registry") {
  CHECK(checker_registry().size() == 9);
  const CheckerInfo* c = find_checker("kbm_square");
  REQUIRE(c != nullptr);
  CHECK(c->needs_spec);
  CHECK(find_checker("bipartite_reverse")->poset_spec);
  CHECK_FALSE(find_checker("separating_examples")->needs_spec);
  CHECK(find_checker("nonsense") == nullptr);

  auto spec = InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 4);
  auto report = find_checker("kbm_square")->run(spec);
  CHECK(report.pass());
}

TEST_CASE("spec-kind mismatches are input errors") {
  CHECK_THROWS_AS(
      check_kbm_square(InstanceSpec::exhaustive(InstanceKind::exhaustive_posets, 3)),
      std::invalid_argument);
  CHECK_THROWS_AS(check_bipartite_reverse(
                      InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 3)),
                  std::invalid_argument);
}

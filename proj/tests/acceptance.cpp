// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bcl/bicliques.hpp"
#include "bcl/generators.hpp"
#include "bcl/harness.hpp"
#include "bcl/io.hpp"
#include "bcl/isomorphism.hpp"
#include "bcl/named_graphs.hpp"
#include "bcl/operators.hpp"
#include "bcl/patterns.hpp"
#include "bcl/posets.hpp"

using namespace bcl;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_ms;
  std::function<bool(std::string&)> run;
};

bool report_pass(const VerificationReport& r, std::string& detail) {
  detail = "checked=" + std::to_string(r.checked) + " skipped=" +
           std::to_string(r.skipped) + " failures=" + std::to_string(r.failures.size());
  if (!r.failures.empty()) detail += " first: " + r.failures.front().witness;
  return r.pass();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "KB(co-domino) is the 4-wheel, exact isomorphism found", 1000,
                      [](std::string& detail) {
                        auto image = kb(co_domino_graph());
                        auto map = find_isomorphism(image.graph, wheel4_graph());
                        if (!map) {
                          detail = "no isomorphism";
                          return false;
                        }
                        detail = "bicliques=" + std::to_string(image.family.items.size()) +
                                 " map=";
                        for (int v : *map) detail += std::to_string(v);
                        return image.family.items.size() == 5;
                      }});

  criteria.push_back(
      {2, "4-wheel has no square root among all 1024 labeled graphs on 5 vertices", 1000,
       [](std::string& detail) {
         Graph target = wheel4_graph();
         // Direct sweep over every labeled graph on 5 vertices, independent
         // of the pruned search.
         std::vector<std::pair<int, int>> pairs;
         for (int u = 0; u < 5; ++u)
           for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
         long long candidates = 0, roots = 0;
         for (unsigned mask = 0; mask < (1u << 10); ++mask) {
           std::vector<std::pair<int, int>> edges;
           for (std::size_t i = 0; i < pairs.size(); ++i)
             if (mask >> i & 1) edges.push_back(pairs[i]);
           ++candidates;
           if (square(Graph(5, edges)) == target) ++roots;
         }
         bool pruned_agrees = !find_square_root(target).has_value();
         detail = "candidates=" + std::to_string(candidates) + " roots=" +
                  std::to_string(roots) + " pruned_search_agrees=" +
                  (pruned_agrees ? "yes" : "no");
         return candidates == 1024 && roots == 0 && pruned_agrees;
       }});

  criteria.push_back(
      {3, "square(KBm) = KB on connected triangle-free graphs to 7 and 1000 random n=10",
       5 * 60 * 1000, [](std::string& detail) {
         auto exhaustive = check_kbm_square(
             InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 7));
         auto random = check_kbm_square(
             InstanceSpec::random(InstanceKind::random_triangle_free, 10, 0.3, 1000, 1));
         std::string a, b;
         bool ok = report_pass(exhaustive, a) & report_pass(random, b);
         detail = "exhaustive: " + a + "; random: " + b;
         return ok;
       }});

  criteria.push_back(
      {4, "KBm is net*-free and clique-orderable on connected graphs to 6", 5 * 60 * 1000,
       [](std::string& detail) {
         auto spec = InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 6);
         auto netstar = check_netstar_free(spec);
         auto ordering = check_clique_ordering(spec);
         std::string a, b;
         bool ok = report_pass(netstar, a) & report_pass(ordering, b);
         detail = "net*: " + a + "; ordering: " + b;
         return ok;
       }});

  criteria.push_back(
      {5, "every induced P3 of KB completes to a diamond or 3-fan (triangle-free to 7)",
       5 * 60 * 1000, [](std::string& detail) {
         auto report = check_star_containment(
             InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 7), 2);
         return report_pass(report, detail);
       }});

  criteria.push_back(
      {6, "independent-set union bound and neighborhood-twin exclusion (to 7)",
       5 * 60 * 1000, [](std::string& detail) {
         auto spec = InstanceSpec::exhaustive(InstanceKind::exhaustive_triangle_free, 7);
         auto unions = check_independent_union(spec);
         auto twins = check_equal_neighborhoods(spec);
         std::string a, b;
         bool ok = report_pass(unions, a) & report_pass(twins, b);
         detail = "unions: " + a + "; twins: " + b;
         return ok;
       }});

  criteria.push_back(
      {7, "bipartite: biclique poset is IIC and comparability = KBm (to 8)",
       10 * 60 * 1000, [](std::string& detail) {
         auto report = check_bipartite_forward(
             InstanceSpec::exhaustive(InstanceKind::exhaustive_bipartite, 8));
         return report_pass(report, detail);
       }});

  criteria.push_back(
      {8, "IIC posets to 5: G_P bicliques are {X_vY_v}; crown control misbehaves",
       10 * 60 * 1000, [](std::string& detail) {
         auto report = check_bipartite_reverse(
             InstanceSpec::exhaustive(InstanceKind::exhaustive_posets, 5));
         std::string a;
         bool ok = report_pass(report, a);
         // Negative control: the 2+2 crown is not IIC and its G_P grows a
         // biclique outside the canonical family.
         Poset crown(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
         bool crown_not_iic = !is_iic(crown);
         auto canon = canonical_gp_bicliques(crown);
         auto found = enumerate_bicliques(canon.host);
         bool extra = found.items.size() > canon.items.size();
         detail = a + "; crown non-IIC: " + (crown_not_iic ? "yes" : "no") +
                  ", extra G_P biclique: " + (extra ? "yes" : "no");
         return ok && crown_not_iic && extra;
       }});

  criteria.push_back(
      {9, "enumerator matches the oracle on all graphs to 7 and 500 random n=9",
       10 * 60 * 1000, [](std::string& detail) {
         long long tested = 0, mismatched = 0;
         for (int n = 2; n <= 7; ++n)
           for (const Graph& g : exhaustive_graphs(n)) {
             if (g.edge_count() == 0) continue;
             ++tested;
             if (!(enumerate_bicliques(g).items == enumerate_bicliques_oracle(g).items))
               ++mismatched;
           }
         std::mt19937_64 rng(9);
         long long sampled = 0;
         for (int i = 0; i < 500; ++i) {
           Graph g = random_gnp(9, 0.5, rng);
           if (g.edge_count() == 0) continue;
           ++sampled;
           if (!(enumerate_bicliques(g).items == enumerate_bicliques_oracle(g).items))
             ++mismatched;
         }
         detail = "exhaustive=" + std::to_string(tested) + " random=" +
                  std::to_string(sampled) + " mismatched=" + std::to_string(mismatched);
         return mismatched == 0;
       }});

  criteria.push_back(
      {10, "bounded evidence: KB(g) is never net^2 on connected graphs to 7 (not a proof)",
       10 * 60 * 1000, [](std::string& detail) {
         auto report = check_separating_examples();
         bool ok = report_pass(report, detail);
         detail += " [bounded evidence only]";
         return ok;
       }});

  criteria.push_back(
      {11, "verify reports are byte-identical across runs with a fixed seed",
       10 * 60 * 1000, [](std::string& detail) {
         auto spec =
             InstanceSpec::random(InstanceKind::random_triangle_free, 10, 0.3, 50, 7);
         std::string first = check_kbm_square(spec).to_record();
         std::string second = check_kbm_square(spec).to_record();
         auto pspec = InstanceSpec::exhaustive(InstanceKind::exhaustive_posets, 4);
         std::string third = check_bipartite_reverse(pspec).to_record();
         std::string fourth = check_bipartite_reverse(pspec).to_record();
         detail = "records " + std::to_string(first.size()) + "B and " +
                  std::to_string(third.size()) + "B";
         return first == second && third == fourth;
       }});

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool in_budget = ms < c.budget_ms;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %2d: %s (%.0f ms%s)\n      %s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), ms, in_budget ? "" : ", OVER BUDGET", detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}

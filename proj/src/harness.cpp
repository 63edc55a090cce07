#include "bcl/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "bcl/io.hpp"
#include "bcl/isomorphism.hpp"
#include "bcl/named_graphs.hpp"
#include "bcl/operators.hpp"
#include "bcl/patterns.hpp"

namespace bcl {

int worker_count() {
  static const int cached = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("BICLIQUE_LAB_THREADS")) {
      int requested = std::atoi(env);
      if (requested >= 1) return std::min(requested, hw);
    }
    return hw;
  }();
  return cached;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string VerificationReport::to_record() const {
  nlohmann::json j;
  j["check"] = check;
  j["spec"] = spec_text;
  j["generated"] = generated;
  j["checked"] = checked;
  j["skipped"] = skipped;
  auto fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"instance", f.instance}, {"witness", f.witness}});
  j["failures"] = fails;
  return j.dump();
}

// ---------------------------------------------------------------------------
// Per-instance predicates.

std::optional<std::string> kbm_square_violation(const Graph& g) {
  auto family = enumerate_bicliques(g);
  Graph kb_graph = kb(family).graph;
  Graph kbm_square = square(kbm(family).graph);
  if (kbm_square == kb_graph) return std::nullopt;
  std::string w = "square(KBm) != KB on " + std::to_string(kb_graph.vertex_count()) +
                  " bicliques; KB edges:";
  for (auto [u, v] : kb_graph.edges())
    w += " " + std::to_string(u) + "-" + std::to_string(v);
  w += "; square(KBm) edges:";
  for (auto [u, v] : kbm_square.edges())
    w += " " + std::to_string(u) + "-" + std::to_string(v);
  return w;
}

std::optional<std::string> netstar_violation(const Graph& g) {
  Graph h = kbm(g).graph;
  auto hit = find_net_star(h);
  if (!hit) return std::nullopt;
  std::string w = "induced net* in KBm at bicliques";
  for (int v : hit->map) w += " " + std::to_string(v);
  return w;
}

std::optional<std::string> clique_ordering_violation(const Graph& g) {
  Graph h = kbm(g).graph;
  auto result = clique_ordering_check(h);
  if (result.verdict == CliqueOrderingResult::Verdict::pass) return std::nullopt;
  std::string w = result.verdict == CliqueOrderingResult::Verdict::fail
                      ? "no anchored consecutive ordering for clique {"
                      : "ordering unverified for clique {";
  w += result.clique.to_string() + "} traces:";
  for (const auto& [q, t] : result.traces)
    w += " " + std::to_string(q) + "->{" + t.to_string() + "}";
  return w;
}

std::optional<std::string> star_containment_violation(const Graph& g, int k_max) {
  auto family = enumerate_bicliques(g);
  Graph h = kb(family).graph;
  Graph witness = kbm(family).graph;
  if (!(square(witness) == h)) return "KB is not the square of KBm";

  const int n = h.vertex_count();
  std::optional<std::string> found;
  // Enumerate induced stars: center c, leaves = independent k-subsets of N(c).
  std::vector<int> leaves;
  auto try_star = [&](int c) -> bool {
    StarContainment r = k1n_containment_check(h, witness, StarEmbedding{c, leaves});
    if (r.ok) return false;
    std::string w = "star center " + std::to_string(c) + " leaves {";
    for (std::size_t i = 0; i < leaves.size(); ++i)
      w += (i ? " " : "") + std::to_string(leaves[i]);
    w += "}: " + r.reason;
    found = std::move(w);
    return true;
  };
  for (int c = 0; c < n && !found; ++c) {
    const VertexSet& nc = h.neighbors(c);
    auto extend = [&](auto&& self, int min_next) -> bool {
      int k = static_cast<int>(leaves.size());
      if (k >= 2 && try_star(c)) return true;
      if (k == k_max) return false;
      for (int v = nc.next(min_next - 1); v >= 0; v = nc.next(v)) {
        bool independent = true;
        for (int u : leaves)
          if (h.has_edge(u, v)) {
            independent = false;
            break;
          }
        if (!independent) continue;
        leaves.push_back(v);
        if (self(self, v + 1)) return true;
        leaves.pop_back();
      }
      return false;
    };
    leaves.clear();
    extend(extend, 0);
  }
  return found;
}

std::optional<std::string> independent_union_violation(const Graph& g) {
  Graph h = kb(g).graph;
  const int n = h.vertex_count();
  std::optional<std::string> found;
  std::vector<int> members;
  auto extend = [&](auto&& self, int min_next, VertexSet common, VertexSet unioned) -> bool {
    int size = static_cast<int>(members.size());
    if (size >= 3 && common.count() >= 3 && unioned.count() <= size) {
      std::string w = "independent set {";
      for (int i = 0; i < size; ++i) w += (i ? " " : "") + std::to_string(members[i]);
      w += "} has common neighborhood {" + common.to_string() + "} but union {" +
           unioned.to_string() + "}";
      found = std::move(w);
      return true;
    }
    if (size == 6) return false;
    for (int v = min_next; v < n; ++v) {
      bool independent = true;
      for (int u : members)
        if (h.has_edge(u, v)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      VertexSet c2 = size == 0 ? h.neighbors(v) : (common & h.neighbors(v));
      if (c2.count() < 3) continue;  // the common neighborhood only shrinks
      members.push_back(v);
      if (self(self, v + 1, std::move(c2), unioned | h.neighbors(v))) return true;
      members.pop_back();
    }
    return false;
  };
  extend(extend, 0, VertexSet(n), VertexSet(n));
  return found;
}

std::optional<std::string> equal_neighborhood_violation(const Graph& g) {
  Graph h = kb(g).graph;
  if (isomorphic(h, diamond_graph())) return std::nullopt;  // the one exemption
  const int n = h.vertex_count();
  std::map<VertexSet, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[h.neighbors(v)].push_back(v);
  for (const auto& [nbhd, members] : classes) {
    const int s = static_cast<int>(members.size());
    const int m = nbhd.count();
    if (s < 2) continue;
    // The class supports n = max(2, m) .. s twins; the smallest n needs the
    // fewest clique extras, so it decides.
    int wanted = std::max(2, m);
    if (wanted > s) continue;
    bool clique = true;
    for (int u = nbhd.first(); u >= 0 && clique; u = nbhd.next(u))
      for (int v = nbhd.next(u); v >= 0; v = nbhd.next(v))
        if (!h.has_edge(u, v)) {
          clique = false;
          break;
        }
    if (!clique) continue;
    int extras_needed = wanted - m;
    bool extendable = extras_needed == 0;
    if (!extendable) {
      VertexSet candidates(n);
      for (int u = 0; u < n; ++u)
        if (!nbhd.contains(u) && nbhd.subset_of(h.neighbors(u))) candidates.add(u);
      if (!candidates.empty()) {
        auto sub = induced_subgraph(h, candidates);
        int best = 0;
        for (const VertexSet& c : maximal_cliques(sub.graph)) best = std::max(best, c.count());
        extendable = best >= extras_needed;
      }
    }
    if (extendable) {
      std::string w = "vertices {";
      for (std::size_t i = 0; i < members.size(); ++i)
        w += (i ? " " : "") + std::to_string(members[i]);
      w += "} share neighborhood {" + nbhd.to_string() + "} inside a K_" +
           std::to_string(wanted);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<std::string> bipartite_forward_violation(const Graph& g) {
  auto family = enumerate_bicliques(g);
  Poset poset = biclique_poset(g, family);
  Graph comp = comparability_graph(poset);
  Graph kbm_graph = kbm(family).graph;
  if (!(comp == kbm_graph)) {
    std::string w = "comparability(biclique poset) != KBm; comparability edges:";
    for (auto [u, v] : comp.edges()) w += " " + std::to_string(u) + "-" + std::to_string(v);
    w += "; KBm edges:";
    for (auto [u, v] : kbm_graph.edges())
      w += " " + std::to_string(u) + "-" + std::to_string(v);
    return w;
  }
  if (auto witness = find_iic_violation(poset)) {
    std::string w = "biclique poset not IIC: ";
    w += witness->side == IICWitness::Side::predecessor ? "pred" : "succ";
    w += " intervals of " + std::to_string(witness->u) + ", " + std::to_string(witness->v) +
         " meet in unrealized {" + witness->intersection.to_string() + "}";
    return w;
  }
  return std::nullopt;
}

std::optional<std::string> bipartite_reverse_violation(const Poset& p) {
  const int m = p.size();
  BicliqueFamily canon = canonical_gp_bicliques(p);
  BicliqueFamily fam = enumerate_bicliques(canon.host);
  if (!(fam.items == canon.items)) {
    std::string w = "bicliques of G_P differ from {X_vY_v}: got " +
                    std::to_string(fam.items.size()) + ", canonical " +
                    std::to_string(canon.items.size());
    for (const Biclique& b : fam.items) {
      bool known = false;
      for (const Biclique& c : canon.items)
        if (b == c) {
          known = true;
          break;
        }
      if (!known) w += "; extra biclique " + to_string(b);
    }
    return w;
  }
  // phi: element v -> index of X_vY_v in the family order.
  std::vector<int> phi(m, -1);
  for (int v = 0; v < m; ++v) {
    VertexSet x(2 * m), y(2 * m);
    for (int u = p.pred_interval(v).first(); u >= 0; u = p.pred_interval(v).next(u)) x.add(u);
    for (int w = p.succ_interval(v).first(); w >= 0; w = p.succ_interval(v).next(w))
      y.add(m + w);
    Biclique target = Biclique::canonical(std::move(x), std::move(y));
    for (std::size_t i = 0; i < fam.items.size(); ++i)
      if (fam.items[i] == target) {
        phi[v] = static_cast<int>(i);
        break;
      }
    if (phi[v] < 0) return "X_vY_v missing from the family for element " + std::to_string(v);
  }
  Graph comp = comparability_graph(p);
  Graph kbm_graph = kbm(fam).graph;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (comp.has_edge(u, v) != kbm_graph.has_edge(phi[u], phi[v]))
        return "KBm(G_P) disagrees with comparability at (" + std::to_string(u) + ", " +
               std::to_string(v) + ")";
  Graph comp_square = square(comp);
  Graph kb_graph = kb(fam).graph;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (comp_square.has_edge(u, v) != kb_graph.has_edge(phi[u], phi[v]))
        return "KB(G_P) disagrees with comparability^2 at (" + std::to_string(u) + ", " +
               std::to_string(v) + ")";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Checker scaffolding.

namespace {

enum class Outcome : char { ok, skipped, failed };

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

VerificationReport run_graph_check(
    const std::string& name, const InstanceSpec& spec,
    const std::function<bool(const Graph&)>& in_scope,
    const std::function<std::optional<std::string>(const Graph&)>& violation) {
  Timer timer;
  spec.validate();
  if (is_poset_kind(spec.kind))
    throw std::invalid_argument(name + ": needs a graph instance spec");
  InstanceStream stream = generate(spec);
  const auto& graphs = stream.graphs;
  std::vector<Outcome> outcomes(graphs.size(), Outcome::ok);
  std::vector<std::string> witnesses(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    if (graphs[i].edge_count() == 0 || !in_scope(graphs[i])) {
      outcomes[i] = Outcome::skipped;
      return;
    }
    if (auto w = violation(graphs[i])) {
      outcomes[i] = Outcome::failed;
      witnesses[i] = std::move(*w);
    }
  });
  VerificationReport report;
  report.check = name;
  report.spec_text = spec.to_string();
  report.generated = static_cast<long long>(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (outcomes[i] == Outcome::skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (outcomes[i] == Outcome::failed)
      report.failures.push_back({render_graph(graphs[i]), witnesses[i]});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

}  // namespace

VerificationReport check_kbm_square(const InstanceSpec& spec) {
  return run_graph_check("kbm_square", spec, is_triangle_free, kbm_square_violation);
}

VerificationReport check_netstar_free(const InstanceSpec& spec) {
  return run_graph_check("netstar_free", spec, [](const Graph&) { return true; },
                         netstar_violation);
}

VerificationReport check_clique_ordering(const InstanceSpec& spec) {
  return run_graph_check("clique_ordering", spec, [](const Graph&) { return true; },
                         clique_ordering_violation);
}

VerificationReport check_star_containment(const InstanceSpec& spec, int k_max) {
  return run_graph_check("star_containment", spec, is_triangle_free,
                         [k_max](const Graph& g) {
                           return star_containment_violation(g, k_max);
                         });
}

VerificationReport check_independent_union(const InstanceSpec& spec) {
  return run_graph_check("independent_union", spec, is_triangle_free,
                         independent_union_violation);
}

VerificationReport check_equal_neighborhoods(const InstanceSpec& spec) {
  return run_graph_check("equal_neighborhoods", spec, is_triangle_free,
                         equal_neighborhood_violation);
}

VerificationReport check_bipartite_forward(const InstanceSpec& spec) {
  return run_graph_check("bipartite_forward", spec, is_bipartite,
                         bipartite_forward_violation);
}

VerificationReport check_bipartite_reverse(const InstanceSpec& spec) {
  Timer timer;
  spec.validate();
  if (!is_poset_kind(spec.kind))
    throw std::invalid_argument("bipartite_reverse: needs a poset instance spec");
  InstanceStream stream = generate(spec);
  const auto& posets = stream.posets;
  std::vector<Outcome> outcomes(posets.size(), Outcome::ok);
  std::vector<std::string> witnesses(posets.size());
  parallel_for(posets.size(), [&](std::size_t i) {
    if (!is_iic(posets[i])) {
      outcomes[i] = Outcome::skipped;
      return;
    }
    if (auto w = bipartite_reverse_violation(posets[i])) {
      outcomes[i] = Outcome::failed;
      witnesses[i] = std::move(*w);
    }
  });
  VerificationReport report;
  report.check = "bipartite_reverse";
  report.spec_text = spec.to_string();
  report.generated = static_cast<long long>(posets.size());
  for (std::size_t i = 0; i < posets.size(); ++i) {
    if (outcomes[i] == Outcome::skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (outcomes[i] == Outcome::failed)
      report.failures.push_back({render_poset(posets[i]), witnesses[i]});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

VerificationReport check_separating_examples() {
  Timer timer;
  VerificationReport report;
  report.check = "separating_examples";
  report.spec_text = "fixed-examples + exhaustive-connected n=1..7";

  {
    ++report.generated;
    ++report.checked;
    Graph image = kb(co_domino_graph()).graph;
    if (!isomorphic(image, wheel4_graph()))
      report.failures.push_back(
          {render_graph(co_domino_graph()), "KB(co-domino) is not a 4-wheel"});
  }
  {
    ++report.generated;
    ++report.checked;
    if (auto root = find_square_root(wheel4_graph()))
      report.failures.push_back(
          {render_graph(wheel4_graph()), "unexpected square root:\n" + render_graph(*root)});
  }
  Graph net_square = square(net_graph());
  InstanceStream stream =
      generate(InstanceSpec::exhaustive(InstanceKind::exhaustive_connected, 7));
  const auto& graphs = stream.graphs;
  std::vector<Outcome> outcomes(graphs.size(), Outcome::ok);
  parallel_for(graphs.size(), [&](std::size_t i) {
    if (graphs[i].edge_count() == 0) {
      outcomes[i] = Outcome::skipped;
      return;
    }
    Graph image = kb(graphs[i]).graph;
    if (image.vertex_count() == net_square.vertex_count() &&
        isomorphic(image, net_square))
      outcomes[i] = Outcome::failed;
  });
  report.generated += static_cast<long long>(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (outcomes[i] == Outcome::skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (outcomes[i] == Outcome::failed)
      report.failures.push_back({render_graph(graphs[i]), "KB(g) is isomorphic to net^2"});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

const std::vector<CheckerInfo>& checker_registry() {
  static const std::vector<CheckerInfo> registry = [] {
    std::vector<CheckerInfo> r;
    r.push_back({"kbm_square", "square(KBm(g)) equals KB(g) on triangle-free instances",
                 true, false, check_kbm_square});
    r.push_back({"netstar_free", "KBm(g) has no induced net* variant", true, false,
                 check_netstar_free});
    r.push_back({"clique_ordering",
                 "maximal cliques of KBm(g) order with anchored consecutive traces", true,
                 false, check_clique_ordering});
    r.push_back({"star_containment",
                 "induced stars of KB(g) complete to spider squares (triangle-free)", true,
                 false, [](const InstanceSpec& s) { return check_star_containment(s); }});
    r.push_back({"independent_union",
                 "independent sets of KB(g) with big common neighborhoods spread wide",
                 true, false, check_independent_union});
    r.push_back({"equal_neighborhoods",
                 "no clique-boxed neighborhood twins in KB(g) (triangle-free)", true, false,
                 check_equal_neighborhoods});
    r.push_back({"bipartite_forward",
                 "biclique poset of bipartite g is IIC with comparability = KBm", true,
                 false, check_bipartite_forward});
    r.push_back({"bipartite_reverse",
                 "bicliques of G_P are {X_vY_v} and v -> X_vY_v is an isomorphism", true,
                 true, check_bipartite_reverse});
    r.push_back({"separating_examples",
                 "KB(co-domino) = 4-wheel; 4-wheel has no root; net^2 avoids KB", false,
                 false, [](const InstanceSpec&) { return check_separating_examples(); }});
    return r;
  }();
  return registry;
}

const CheckerInfo* find_checker(const std::string& name) {
  for (const auto& c : checker_registry())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace bcl

// biclique-lab: biclique graph operators, poset machinery and a
// verification harness over exhaustive or random instance sets.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bcl/harness.hpp"
#include "bcl/io.hpp"
#include "bcl/isomorphism.hpp"
#include "bcl/named_graphs.hpp"
#include "bcl/operators.hpp"
#include "bcl/patterns.hpp"
#include "bcl/posets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTheoremViolation = 2;

struct GraphInput {
  std::string path;
  std::string named;
  std::optional<int> parameter;

  bcl::Graph load() const {
    if (!named.empty()) return bcl::named_graph(named, parameter);
    if (path == "-") {
      std::ostringstream buffer;
      buffer << std::cin.rdbuf();
      return bcl::parse_graph(buffer.str());
    }
    return bcl::parse_graph_file(path);
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("file", in.path, "graph file (edge list or graph6); '-' for stdin");
  cmd->add_option("--named", in.named, "built-in graph name instead of a file");
  cmd->add_option("--param", in.parameter, "parameter for --named (size/mask)");
  cmd->callback([&in, cmd] {
    if (in.path.empty() && in.named.empty())
      throw CLI::ValidationError(cmd->get_name(), "needs a file or --named");
  });
}

std::vector<std::string> biclique_labels(const bcl::BicliqueFamily& family) {
  std::vector<std::string> labels;
  labels.reserve(family.items.size());
  for (const auto& b : family.items)
    labels.push_back(b.x.to_string() + "|" + b.y.to_string());
  return labels;
}

void print_operator_result(const bcl::OperatorResult& result, bool dot) {
  for (std::size_t i = 0; i < result.family.items.size(); ++i)
    std::printf("# %zu: %s\n", i, bcl::to_string(result.family.items[i]).c_str());
  std::fputs(bcl::render_graph(result.graph).c_str(), stdout);
  if (dot) std::fputs(bcl::to_dot(result.graph, biclique_labels(result.family)).c_str(), stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biclique graph operators and theorem verification"};
  app.require_subcommand(1);

  GraphInput graph_in;
  bool dot = false;

  auto* cmd_bicliques = app.add_subcommand("bicliques", "list all bicliques, one 'X | Y' line each");
  add_graph_input(cmd_bicliques, graph_in);

  auto* cmd_kb = app.add_subcommand("kb", "biclique intersection graph KB(G)");
  add_graph_input(cmd_kb, graph_in);
  cmd_kb->add_flag("--dot", dot, "also emit a DOT rendering");

  auto* cmd_kbm = app.add_subcommand("kbm", "mutually included biclique graph KBm(G)");
  add_graph_input(cmd_kbm, graph_in);
  cmd_kbm->add_flag("--dot", dot, "also emit a DOT rendering");

  auto* cmd_square = app.add_subcommand("square", "graph square G^2");
  add_graph_input(cmd_square, graph_in);
  cmd_square->add_flag("--dot", dot, "also emit a DOT rendering");

  auto* cmd_patterns = app.add_subcommand("patterns", "structural pattern checks");
  std::string pattern_kind;
  cmd_patterns->add_option("kind", pattern_kind, "netstar | clique-ordering | square-root")
      ->required();
  add_graph_input(cmd_patterns, graph_in);

  auto* cmd_poset = app.add_subcommand("poset", "poset machinery");
  std::string poset_kind, poset_path;
  cmd_poset->add_option("kind", poset_kind, "iic | comparability | predsucc | recognize")
      ->required();
  cmd_poset->add_option("file", poset_path, "poset file ('recognize' takes a graph file)")
      ->required();
  cmd_poset->add_flag("--dot", dot, "DOT output where a graph is produced");

  auto* cmd_verify = app.add_subcommand("verify", "run a theorem checker and print its report");
  std::string check_name;
  cmd_verify->add_option("check", check_name, "checker name (see --list)")->required(false);
  bool list_checks = false;
  cmd_verify->add_flag("--list", list_checks, "list available checkers");
  int ex_connected = 0, ex_bipartite = 0, ex_tf = 0, ex_posets = 0;
  cmd_verify->add_option("--exhaustive-connected", ex_connected,
                         "all connected graphs with up to N vertices");
  cmd_verify->add_option("--exhaustive-bipartite", ex_bipartite,
                         "all connected bipartite graphs with up to N vertices");
  cmd_verify->add_option("--exhaustive-triangle-free", ex_tf,
                         "all connected triangle-free graphs with up to N vertices");
  cmd_verify->add_option("--exhaustive-posets", ex_posets, "all posets with up to M elements");
  int rnd_gnp = 0, rnd_bip = 0, rnd_tf = 0;
  cmd_verify->add_option("--random-gnp", rnd_gnp, "random G(n,p) graphs on N vertices");
  cmd_verify->add_option("--random-bipartite", rnd_bip, "random bipartite graphs on N vertices");
  cmd_verify->add_option("--random-triangle-free", rnd_tf,
                         "repaired random triangle-free graphs on N vertices");
  double prob = 0.3;
  int samples = 100;
  std::uint64_t seed = 1;
  int kmax = 2;
  cmd_verify->add_option("--p", prob, "edge probability for random kinds (default 0.3)");
  cmd_verify->add_option("--samples", samples, "sample count for random kinds (default 100)");
  cmd_verify->add_option("--seed", seed, "generator seed (default 1)");
  cmd_verify->add_option("--kmax", kmax, "largest star size for star_containment (default 2)");

  auto* cmd_gen = app.add_subcommand("gen", "emit an instance stream");
  std::string gen_kind;
  int gen_n = 0;
  double gen_p = 0.3;
  int gen_samples = 10;
  std::uint64_t gen_seed = 1;
  cmd_gen->add_option("kind", gen_kind,
                      "exhaustive-connected | exhaustive-bipartite | "
                      "exhaustive-triangle-free | exhaustive-posets | random-gnp | "
                      "random-bipartite | random-triangle-free")
      ->required();
  cmd_gen->add_option("n", gen_n, "size bound (exhaustive) or size (random)")->required();
  cmd_gen->add_option("--p", gen_p, "edge probability for random kinds");
  cmd_gen->add_option("--samples", gen_samples, "sample count for random kinds");
  cmd_gen->add_option("--seed", gen_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_bicliques->parsed()) {
      auto family = bcl::enumerate_bicliques(graph_in.load());
      for (const auto& b : family.items) std::printf("%s\n", bcl::to_string(b).c_str());
      return kExitOk;
    }
    if (cmd_kb->parsed()) {
      print_operator_result(bcl::kb(graph_in.load()), dot);
      return kExitOk;
    }
    if (cmd_kbm->parsed()) {
      print_operator_result(bcl::kbm(graph_in.load()), dot);
      return kExitOk;
    }
    if (cmd_square->parsed()) {
      bcl::Graph sq = bcl::square(graph_in.load());
      std::fputs(bcl::render_graph(sq).c_str(), stdout);
      if (dot) std::fputs(bcl::to_dot(sq).c_str(), stdout);
      return kExitOk;
    }

    if (cmd_patterns->parsed()) {
      bcl::Graph g = graph_in.load();
      if (pattern_kind == "netstar") {
        if (auto hit = bcl::find_net_star(g)) {
          std::printf("net* found at vertices");
          for (int v : hit->map) std::printf(" %d", v);
          std::printf("\n");
        } else {
          std::printf("net*-free\n");
        }
        return kExitOk;
      }
      if (pattern_kind == "clique-ordering") {
        auto result = bcl::clique_ordering_check(g);
        switch (result.verdict) {
          case bcl::CliqueOrderingResult::Verdict::pass:
            std::printf("pass\n");
            break;
          case bcl::CliqueOrderingResult::Verdict::unverified:
            std::printf("unverified: clique {%s}\n", result.clique.to_string().c_str());
            break;
          case bcl::CliqueOrderingResult::Verdict::fail:
            std::printf("fail: clique {%s}\n", result.clique.to_string().c_str());
            for (const auto& [q, t] : result.traces)
              std::printf("  vertex %d meets {%s}\n", q, t.to_string().c_str());
            break;
        }
        return kExitOk;
      }
      if (pattern_kind == "square-root") {
        if (auto root = bcl::find_square_root(g)) {
          std::printf("# square root\n%s", bcl::render_graph(*root).c_str());
        } else {
          std::printf("no square root\n");
        }
        return kExitOk;
      }
      std::fprintf(stderr, "unknown patterns kind '%s'\n", pattern_kind.c_str());
      return kExitUsage;
    }

    if (cmd_poset->parsed()) {
      if (poset_kind == "recognize") {
        bcl::Graph g = bcl::parse_graph_file(poset_path);
        if (auto poset = bcl::find_iic_orientation(g)) {
          std::printf("IIC-comparability\n%s", bcl::render_poset(*poset).c_str());
        } else {
          std::printf("not IIC-comparability\n");
        }
        return kExitOk;
      }
      bcl::Poset p = bcl::parse_poset_file(poset_path);
      if (poset_kind == "iic") {
        if (auto witness = bcl::find_iic_violation(p)) {
          std::printf("not IIC: %s intervals of %d and %d meet in unrealized {%s}\n",
                      witness->side == bcl::IICWitness::Side::predecessor ? "predecessor"
                                                                          : "successor",
                      witness->u, witness->v, witness->intersection.to_string().c_str());
        } else {
          std::printf("IIC\n");
        }
        return kExitOk;
      }
      if (poset_kind == "comparability") {
        bcl::Graph comp = bcl::comparability_graph(p);
        std::fputs(bcl::render_graph(comp).c_str(), stdout);
        if (dot) std::fputs(bcl::to_dot(comp).c_str(), stdout);
        return kExitOk;
      }
      if (poset_kind == "predsucc") {
        bcl::Graph gp = bcl::pred_succ_graph(p);
        std::printf("# vertices 0..%d are a_v, %d..%d are b_v\n", p.size() - 1, p.size(),
                     2 * p.size() - 1);
        std::fputs(bcl::render_graph(gp).c_str(), stdout);
        if (dot) std::fputs(bcl::to_dot(gp).c_str(), stdout);
        return kExitOk;
      }
      std::fprintf(stderr, "unknown poset kind '%s'\n", poset_kind.c_str());
      return kExitUsage;
    }

    if (cmd_verify->parsed()) {
      if (list_checks) {
        for (const auto& c : bcl::checker_registry())
          std::printf("%-22s %s\n", c.name.c_str(), c.description.c_str());
        return kExitOk;
      }
      const bcl::CheckerInfo* checker = bcl::find_checker(check_name);
      if (!checker) {
        std::fprintf(stderr, "unknown check '%s' (try --list)\n", check_name.c_str());
        return kExitUsage;
      }
      bcl::InstanceSpec spec;
      int spec_flags = 0;
      using K = bcl::InstanceKind;
      if (ex_connected) spec = bcl::InstanceSpec::exhaustive(K::exhaustive_connected, ex_connected), ++spec_flags;
      if (ex_bipartite) spec = bcl::InstanceSpec::exhaustive(K::exhaustive_bipartite, ex_bipartite), ++spec_flags;
      if (ex_tf) spec = bcl::InstanceSpec::exhaustive(K::exhaustive_triangle_free, ex_tf), ++spec_flags;
      if (ex_posets) spec = bcl::InstanceSpec::exhaustive(K::exhaustive_posets, ex_posets), ++spec_flags;
      if (rnd_gnp) spec = bcl::InstanceSpec::random(K::random_gnp, rnd_gnp, prob, samples, seed), ++spec_flags;
      if (rnd_bip) spec = bcl::InstanceSpec::random(K::random_bipartite, rnd_bip, prob, samples, seed), ++spec_flags;
      if (rnd_tf) spec = bcl::InstanceSpec::random(K::random_triangle_free, rnd_tf, prob, samples, seed), ++spec_flags;
      if (checker->needs_spec && spec_flags != 1) {
        std::fprintf(stderr, "check '%s' needs exactly one instance-set flag\n",
                     checker->name.c_str());
        return kExitUsage;
      }
      bcl::VerificationReport report =
          checker->name == "star_containment"
              ? bcl::check_star_containment(spec, kmax)
              : checker->run(spec);
      std::printf("%s\n", report.to_record().c_str());
      std::fprintf(stderr, "# %s: %s in %.1f ms\n", report.check.c_str(),
                   report.pass() ? "pass" : "FAIL", report.elapsed_ms);
      return report.pass() ? kExitOk : kExitTheoremViolation;
    }

    if (cmd_gen->parsed()) {
      using K = bcl::InstanceKind;
      bcl::InstanceSpec spec;
      if (gen_kind == "exhaustive-connected")
        spec = bcl::InstanceSpec::exhaustive(K::exhaustive_connected, gen_n);
      else if (gen_kind == "exhaustive-bipartite")
        spec = bcl::InstanceSpec::exhaustive(K::exhaustive_bipartite, gen_n);
      else if (gen_kind == "exhaustive-triangle-free")
        spec = bcl::InstanceSpec::exhaustive(K::exhaustive_triangle_free, gen_n);
      else if (gen_kind == "exhaustive-posets")
        spec = bcl::InstanceSpec::exhaustive(K::exhaustive_posets, gen_n);
      else if (gen_kind == "random-gnp")
        spec = bcl::InstanceSpec::random(K::random_gnp, gen_n, gen_p, gen_samples, gen_seed);
      else if (gen_kind == "random-bipartite")
        spec = bcl::InstanceSpec::random(K::random_bipartite, gen_n, gen_p, gen_samples, gen_seed);
      else if (gen_kind == "random-triangle-free")
        spec = bcl::InstanceSpec::random(K::random_triangle_free, gen_n, gen_p, gen_samples,
                                         gen_seed);
      else {
        std::fprintf(stderr, "unknown gen kind '%s'\n", gen_kind.c_str());
        return kExitUsage;
      }
      bcl::InstanceStream stream = bcl::generate(spec);
      std::printf("# %s\n", spec.to_string().c_str());
      for (std::size_t i = 0; i < stream.graphs.size(); ++i)
        std::printf("# instance %zu\n%s\n", i, bcl::render_graph(stream.graphs[i]).c_str());
      for (std::size_t i = 0; i < stream.posets.size(); ++i)
        std::printf("# instance %zu\n%s\n", i, bcl::render_poset(stream.posets[i]).c_str());
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bcl/graph.hpp"
#include "bcl/posets.hpp"

namespace bcl {

/// Restriction applied to exhaustive graph generation.
struct GraphClassFilter {
  bool connected = false;
  bool bipartite = false;
  bool triangle_free = false;
};

/// One representative per isomorphism class of graphs on exactly n vertices
/// matching the filter. n <= 7 runs a labeled sweep with isomorphism dedup;
/// n = 8 augments the (n-1)-vertex representatives by one vertex and dedups.
/// Refuses n > 8.
std::vector<Graph> exhaustive_graphs(int n, GraphClassFilter filter = {});

/// One representative per isomorphism class of posets on exactly m elements
/// (labeled sweep of reflexive-antisymmetric-transitive matrices, dedup by
/// relation-preserving bijection). Refuses m > 6.
std::vector<Poset> exhaustive_posets(int m);

/// G(n, p) with edges drawn independently from the given generator.
Graph random_gnp(int n, double p, std::mt19937_64& rng);

/// Random bipartite graph: each vertex picks a side uniformly, then each
/// cross pair is an edge with probability p.
Graph random_bipartite(int n, double p, std::mt19937_64& rng);

/// G(n, p) repaired to triangle-free: while a triangle remains, delete the
/// lexicographically smallest edge of the lexicographically smallest one.
Graph random_triangle_free(int n, double p, std::mt19937_64& rng);

enum class InstanceKind {
  exhaustive_connected,
  exhaustive_bipartite,      // connected bipartite
  exhaustive_triangle_free,  // connected triangle-free
  exhaustive_posets,
  random_gnp,
  random_bipartite,
  random_triangle_free,
};

/// Instance-set description for the verification harness. Exhaustive kinds
/// stream size n_min..n_max (graphs capped at 8 vertices, posets at 6
/// elements); random kinds draw `samples` graphs on n_max vertices from the
/// seeded generator.
struct InstanceSpec {
  InstanceKind kind = InstanceKind::exhaustive_connected;
  int n_min = 1;
  int n_max = 1;
  double edge_probability = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;

  void validate() const;  // throws on out-of-bound or incomplete specs
  std::string to_string() const;

  static InstanceSpec exhaustive(InstanceKind kind, int n_max, int n_min = 1);
  static InstanceSpec random(InstanceKind kind, int n, double p, int samples,
                             std::uint64_t seed);
};

bool is_poset_kind(InstanceKind kind);

/// Materialized instance stream. Exactly one of the two vectors is filled.
struct InstanceStream {
  std::vector<Graph> graphs;
  std::vector<Poset> posets;
};

InstanceStream generate(const InstanceSpec& spec);

}  // namespace bcl

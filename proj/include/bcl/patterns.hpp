#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bcl/graph.hpp"

namespace bcl {

enum class EmbeddingMode { induced, subgraph };

/// Injective vertex map from a pattern into a host. Induced mode preserves
/// edges and non-edges; subgraph mode preserves edges only.
struct Embedding {
  std::vector<int> map;  // pattern vertex -> host vertex
  EmbeddingMode mode = EmbeddingMode::induced;
};

/// Up to `limit` induced embeddings of the pattern, in deterministic order.
/// An empty result with limit > 0 certifies absence.
std::vector<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                    std::size_t limit);

/// Tries all eight net-with-optional-pendant-edges variants as induced
/// subgraphs; returns an embedding of the first hit, else absent.
std::optional<Embedding> find_net_star(const Graph& h);

inline bool is_net_star_free(const Graph& h) { return !find_net_star(h); }

/// Maximal cliques (Bron-Kerbosch), sorted by vertex list.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Outcome of the anchored-consecutive clique ordering test.
///
/// Pass means: every maximal clique C admits an ordering under which each
/// external neighborhood trace N(q) ∩ C is a consecutive run touching the
/// first or last position. Cliques of size <= 8 are settled exhaustively;
/// larger ones use a nested prefix/suffix reconstruction that answers pass
/// or unverified, never a false fail.
///
/// Only maximal cliques need checking: restricting a valid ordering to a
/// subclique keeps every trace a prefix or suffix of the induced order.
struct CliqueOrderingResult {
  enum class Verdict { pass, fail, unverified };
  Verdict verdict = Verdict::pass;
  VertexSet clique;                                // witness clique when not pass
  std::vector<std::pair<int, VertexSet>> traces;   // (external vertex, trace)
};

CliqueOrderingResult clique_ordering_check(const Graph& h);

/// An induced star K_{1,n} inside a graph: designated center plus leaves.
struct StarEmbedding {
  int center = -1;
  std::vector<int> leaves;
};

/// Result of locating a spider pattern under a square.
struct StarContainment {
  bool ok = false;
  bool minus_variant = false;     // true: one star edge already in the witness
  int center = -1;
  std::vector<int> midpoints;     // witness vertices, one per new star edge
  std::vector<int> new_leaves;    // leaves joined through a midpoint
  int old_leaf = -1;              // leaf adjacent to the center in the witness
  std::string reason;             // set when !ok
};

/// Given h = square(witness) exactly (checked; mismatch is an input error)
/// and an induced K_{1,n} of h, finds witness midpoints that realize the
/// full spider D_n (all star edges new) or the clipped spider D_n minus its
/// last tip (exactly one star edge old) with the star's center and leaves in
/// their designated roles.
StarContainment k1n_containment_check(const Graph& h, const Graph& witness,
                                      const StarEmbedding& star);

/// A graph g on the same vertex set with square(g) = h, or absent when no
/// such graph exists. Roots are subgraphs of h, so the sweep runs over edge
/// subsets of h (with a distance-violation prune on larger instances).
/// Refuses h with more than 8 vertices.
std::optional<Graph> find_square_root(const Graph& h);

}  // namespace bcl

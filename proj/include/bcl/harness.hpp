#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcl/generators.hpp"
#include "bcl/graph.hpp"
#include "bcl/posets.hpp"

namespace bcl {

struct FailureRecord {
  std::string instance;  // replayable serialization (edge-list / poset text)
  std::string witness;
};

/// Outcome of one theorem check over an instance set. `checked + skipped`
/// always equals `generated`; an empty failure list is a pass.
struct VerificationReport {
  std::string check;
  std::string spec_text;
  long long generated = 0;
  long long checked = 0;
  long long skipped = 0;
  std::vector<FailureRecord> failures;
  double elapsed_ms = 0.0;

  bool pass() const { return failures.empty(); }

  /// One-line JSON record: check, spec, counts, failures. Elapsed time is
  /// deliberately not part of the record so reruns with the same seed are
  /// byte-identical; callers print it separately.
  std::string to_record() const;
};

// Per-instance violation predicates. Each returns a witness description on
// violation and nothing on success, so a failure report can be replayed by
// parsing its instance text and calling the predicate again. Preconditions
// (triangle-free, bipartite, at least one edge, IIC) are the caller's to
// filter; the harness checkers below count filtered instances as skipped.

/// square(KB_m(g)) must equal KB(g), labeled. Requires g triangle-free.
std::optional<std::string> kbm_square_violation(const Graph& g);

/// KB_m(g) must contain no induced net-with-optional-pendant-edges variant.
std::optional<std::string> netstar_violation(const Graph& g);

/// Every maximal clique of KB_m(g) must order with anchored consecutive
/// external traces.
std::optional<std::string> clique_ordering_violation(const Graph& g);

/// Every induced K_{1,k} of KB(g), 2 <= k <= k_max, must complete to a
/// spider square through KB_m midpoints. Requires g triangle-free.
std::optional<std::string> star_containment_violation(const Graph& g, int k_max);

/// No independent set I of KB(g), 3 <= |I| <= 6, with a common neighborhood
/// of size >= 3 may have a neighborhood union of size <= |I|.
/// Requires g triangle-free.
std::optional<std::string> independent_union_violation(const Graph& g);

/// Unless KB(g) is the diamond, no 2 or more vertices of KB(g) may share a
/// neighborhood of size m that extends to a clique on max(2, m) vertices.
/// Requires g triangle-free.
std::optional<std::string> equal_neighborhood_violation(const Graph& g);

/// comparability(biclique poset) must equal KB_m(g) labeled, and the poset
/// must be IIC. Requires g bipartite.
std::optional<std::string> bipartite_forward_violation(const Graph& g);

/// The bicliques of G_P must be exactly {X_v Y_v}, and v -> X_vY_v must be
/// an isomorphism comparability(p) -> KB_m(G_P) whose square gives KB(G_P).
/// Requires p IIC.
std::optional<std::string> bipartite_reverse_violation(const Poset& p);

// Checkers: generate the spec's instances, apply the predicate to each
// (skipping instances outside the theorem's hypothesis), aggregate.

VerificationReport check_kbm_square(const InstanceSpec& spec);
VerificationReport check_netstar_free(const InstanceSpec& spec);
VerificationReport check_clique_ordering(const InstanceSpec& spec);
VerificationReport check_star_containment(const InstanceSpec& spec, int k_max = 2);
VerificationReport check_independent_union(const InstanceSpec& spec);
VerificationReport check_equal_neighborhoods(const InstanceSpec& spec);
VerificationReport check_bipartite_forward(const InstanceSpec& spec);
VerificationReport check_bipartite_reverse(const InstanceSpec& spec);

/// Fixed separating examples: KB(co-domino) is the 4-wheel, the 4-wheel has
/// no square root, and no connected graph on <= 7 vertices has KB(g)
/// isomorphic to net^2 (bounded evidence, not a proof).
VerificationReport check_separating_examples();

struct CheckerInfo {
  std::string name;
  std::string description;
  bool needs_spec = true;
  bool poset_spec = false;
  std::function<VerificationReport(const InstanceSpec&)> run;
};

const std::vector<CheckerInfo>& checker_registry();
const CheckerInfo* find_checker(const std::string& name);

/// Runs fn(0..count-1) on the worker pool. BICLIQUE_LAB_THREADS caps the
/// pool size. Exceptions propagate after all workers drain.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

int worker_count();

}  // namespace bcl

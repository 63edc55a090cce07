#pragma once

#include "bcl/bicliques.hpp"

namespace bcl {

/// A biclique-operator image together with the family that defines its
/// vertex numbering: vertex i of `graph` is family.items[i].
struct OperatorResult {
  BicliqueFamily family;
  Graph graph;
};

/// KB(G): intersection graph of the bicliques. Edge ij iff the bicliques'
/// vertex sets intersect.
OperatorResult kb(const BicliqueFamily& family);
OperatorResult kb(const Graph& g);

/// KB_m(G): edge ij iff the bicliques are mutually included. Spanning
/// subgraph of KB(G) on the identical vertex set.
OperatorResult kbm(const BicliqueFamily& family);
OperatorResult kbm(const Graph& g);

}  // namespace bcl

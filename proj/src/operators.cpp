#include "bcl/operators.hpp"

namespace bcl {

namespace {

template <typename Related>
OperatorResult build(const BicliqueFamily& family, Related related) {
  const int k = static_cast<int>(family.items.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (related(family.items[i], family.items[j])) edges.emplace_back(i, j);
  return {family, Graph(k, edges)};
}

}  // namespace

OperatorResult kb(const BicliqueFamily& family) {
  return build(family, [](const Biclique& p, const Biclique& q) {
    return p.union_set().intersects(q.union_set());
  });
}

OperatorResult kb(const Graph& g) { return kb(enumerate_bicliques(g)); }

OperatorResult kbm(const BicliqueFamily& family) {
  return build(family, [](const Biclique& p, const Biclique& q) {
    return mutually_included(p, q);
  });
}

OperatorResult kbm(const Graph& g) { return kbm(enumerate_bicliques(g)); }

}  // namespace bcl

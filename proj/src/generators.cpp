#include "bcl/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "bcl/isomorphism.hpp"

namespace bcl {

namespace {

// ---------------------------------------------------------------------------
// Compact labeled graphs on <= 8 vertices: one adjacency bitmask row per
// vertex. Used only inside the exhaustive sweeps, where Graph construction
// per candidate would dominate.

struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, 8> row{};

  void set_edge(int u, int v) {
    row[u] |= std::uint8_t(1u << v);
    row[v] |= std::uint8_t(1u << u);
  }
};

bool small_connected(const SmallGraph& g) {
  std::uint8_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if (frontier >> v & 1) next |= g.row[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == ((1u << g.n) - 1);
}

bool small_triangle_free(const SmallGraph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((g.row[u] >> v & 1) && (g.row[u] & g.row[v])) return false;
  return true;
}

bool small_bipartite(const SmallGraph& g) {
  std::array<int, 8> color{};
  color.fill(-1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < g.n; ++v) {
        if (!(g.row[u] >> v & 1)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool degrees_sorted(const SmallGraph& g) {
  for (int v = 0; v + 1 < g.n; ++v)
    if (std::popcount(unsigned(g.row[v])) > std::popcount(unsigned(g.row[v + 1])))
      return false;
  return true;
}

Graph to_graph(const SmallGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.row[u] >> v & 1) edges.emplace_back(u, v);
  return Graph(g.n, edges);
}

bool passes(const SmallGraph& g, const GraphClassFilter& f) {
  if (f.triangle_free && !small_triangle_free(g)) return false;
  if (f.bipartite && !small_bipartite(g)) return false;
  if (f.connected && !small_connected(g)) return false;
  return true;
}

/// Cheap isomorphism-invariant bucket key: per-vertex (degree, sorted
/// neighbor degrees, triangle count), sorted.
std::string invariant_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::string> sigs(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    int tri = 0;
    const VertexSet& nv = g.neighbors(v);
    for (int u = nv.first(); u >= 0; u = nv.next(u)) {
      nd.push_back(g.degree(u));
      tri += (nv & g.neighbors(u)).count();
    }
    std::sort(nd.begin(), nd.end());
    std::string s;
    s += char('0' + g.degree(v));
    s += char('a' + tri / 2);
    for (int d : nd) s += char('0' + d);
    sigs[v] = std::move(s);
  }
  std::sort(sigs.begin(), sigs.end());
  std::string key;
  for (auto& s : sigs) {
    key += s;
    key += '|';
  }
  return key;
}

/// Inserts g into the bucketed representative set if no isomorphic graph is
/// present yet.
struct IsoDedup {
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::vector<Graph> reps;

  bool insert(const Graph& g) {
    auto& bucket = buckets[invariant_key(g)];
    for (std::size_t idx : bucket)
      if (isomorphic(reps[idx], g)) return false;
    bucket.push_back(reps.size());
    reps.push_back(g);
    return true;
  }
};

std::vector<Graph> sweep_exhaustive(int n, const GraphClassFilter& f) {
  IsoDedup dedup;
  if (n == 1) {
    SmallGraph g;
    g.n = 1;
    if (passes(g, f)) dedup.insert(to_graph(g));
    return dedup.reps;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int np = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    SmallGraph g;
    g.n = n;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1) g.set_edge(pairs[i].first, pairs[i].second);
    // Every class has a labeling with non-decreasing degrees; skipping the
    // rest cuts the dedup load by orders of magnitude.
    if (!degrees_sorted(g)) continue;
    if (!passes(g, f)) continue;
    dedup.insert(to_graph(g));
  }
  return dedup.reps;
}

std::vector<Graph> augment_exhaustive(int n, const GraphClassFilter& f) {
  // Parents carry only the hereditary part of the filter: deleting a vertex
  // preserves triangle-freeness and bipartiteness but not connectivity.
  GraphClassFilter hereditary{false, f.bipartite, f.triangle_free};
  std::vector<Graph> parents = sweep_exhaustive(n - 1, hereditary);
  IsoDedup dedup;
  for (const Graph& parent : parents) {
    auto parent_edges = parent.edges();
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      SmallGraph g;
      g.n = n;
      for (auto [u, v] : parent_edges) g.set_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) g.set_edge(v, n - 1);
      if (!passes(g, f)) continue;
      dedup.insert(to_graph(g));
    }
  }
  return dedup.reps;
}

}  // namespace

std::vector<Graph> exhaustive_graphs(int n, GraphClassFilter filter) {
  if (n < 1) throw std::invalid_argument("exhaustive_graphs: n must be >= 1");
  if (n > 8) throw std::length_error("exhaustive_graphs: refuses n > 8");
  if (n <= 7) return sweep_exhaustive(n, filter);
  return augment_exhaustive(n, filter);
}

// ---------------------------------------------------------------------------
// Posets.

namespace {

/// Relation-preserving bijection between two posets of equal size.
bool posets_isomorphic(const Poset& p, const Poset& q) {
  const int m = p.size();
  if (q.size() != m) return false;
  auto profile = [](const Poset& r, int x) {
    return std::pair<int, int>(r.pred_interval(x).count(), r.succ_interval(x).count());
  };
  {
    std::vector<std::pair<int, int>> a(m), b(m);
    for (int x = 0; x < m; ++x) {
      a[x] = profile(p, x);
      b[x] = profile(q, x);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  auto backtrack = [&](auto&& self, int u) -> bool {
    if (u == m) return true;
    for (int v = 0; v < m; ++v) {
      if (used[v] || profile(p, u) != profile(q, v)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) {
        if (p.leq(u, w) != q.leq(v, map[w])) ok = false;
        if (p.leq(w, u) != q.leq(map[w], v)) ok = false;
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (self(self, u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace

std::vector<Poset> exhaustive_posets(int m) {
  if (m < 1) throw std::invalid_argument("exhaustive_posets: m must be >= 1");
  if (m > 6) throw std::length_error("exhaustive_posets: refuses m > 6");

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  const int np = static_cast<int>(pairs.size());

  std::vector<Poset> reps;
  std::map<std::string, std::vector<std::size_t>> buckets;

  std::uint64_t total = 1;
  for (int i = 0; i < np; ++i) total *= 3;
  std::array<std::uint8_t, 6> up{};
  for (std::uint64_t code = 0; code < total; ++code) {
    up.fill(0);
    for (int x = 0; x < m; ++x) up[x] = std::uint8_t(1u << x);
    std::uint64_t c = code;
    for (int i = 0; i < np; ++i) {
      int trit = static_cast<int>(c % 3);
      c /= 3;
      auto [u, v] = pairs[i];
      if (trit == 1) up[u] |= std::uint8_t(1u << v);
      if (trit == 2) up[v] |= std::uint8_t(1u << u);
    }
    // Transitivity: the up-set of anything reachable stays inside.
    bool transitive = true;
    for (int u = 0; u < m && transitive; ++u)
      for (int v = 0; v < m; ++v)
        if ((up[u] >> v & 1) && (up[v] & ~up[u])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;

    std::vector<std::pair<int, int>> rel;
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        if (u != v && (up[u] >> v & 1)) rel.emplace_back(u, v);
    Poset p(m, rel);

    std::string key;
    {
      std::vector<std::pair<int, int>> prof(m);
      for (int x = 0; x < m; ++x)
        prof[x] = {p.pred_interval(x).count(), p.succ_interval(x).count()};
      std::sort(prof.begin(), prof.end());
      for (auto [a, b] : prof) {
        key += char('0' + a);
        key += char('0' + b);
      }
    }
    auto& bucket = buckets[key];
    bool dup = false;
    for (std::size_t idx : bucket)
      if (posets_isomorphic(reps[idx], p)) {
        dup = true;
        break;
      }
    if (!dup) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(p));
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Random kinds.

namespace {

/// Uniform double in [0,1) from explicit bit manipulation, so streams are
/// identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next_unit(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_bipartite(int n, double p, std::mt19937_64& rng) {
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = rng() & 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] != side[v] && next_unit(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_triangle_free(int n, double p, std::mt19937_64& rng) {
  Graph g = random_gnp(n, p, rng);
  while (true) {
    auto tri = find_triangle(g);  // lexicographically smallest (u, v, w)
    if (!tri) return g;
    auto [u, v, w] = *tri;
    auto edges = g.edges();
    std::erase(edges, std::pair<int, int>{u, v});
    g = Graph(n, edges);
  }
}

// ---------------------------------------------------------------------------
// InstanceSpec and streams.

void InstanceSpec::validate() const {
  switch (kind) {
    case InstanceKind::exhaustive_connected:
    case InstanceKind::exhaustive_bipartite:
    case InstanceKind::exhaustive_triangle_free:
      if (n_min < 1 || n_min > n_max) throw std::invalid_argument("InstanceSpec: bad size range");
      if (n_max > 8) throw std::length_error("InstanceSpec: exhaustive graphs capped at n = 8");
      return;
    case InstanceKind::exhaustive_posets:
      if (n_min < 1 || n_min > n_max) throw std::invalid_argument("InstanceSpec: bad size range");
      if (n_max > 6) throw std::length_error("InstanceSpec: exhaustive posets capped at m = 6");
      return;
    case InstanceKind::random_gnp:
    case InstanceKind::random_bipartite:
    case InstanceKind::random_triangle_free:
      if (n_max < 1) throw std::invalid_argument("InstanceSpec: bad size");
      if (samples < 1) throw std::invalid_argument("InstanceSpec: random kinds need samples >= 1");
      if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("InstanceSpec: edge probability outside [0,1]");
      return;
  }
  throw std::invalid_argument("InstanceSpec: unknown kind");
}

namespace {

const char* kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::exhaustive_connected: return "exhaustive-connected";
    case InstanceKind::exhaustive_bipartite: return "exhaustive-bipartite";
    case InstanceKind::exhaustive_triangle_free: return "exhaustive-triangle-free";
    case InstanceKind::exhaustive_posets: return "exhaustive-posets";
    case InstanceKind::random_gnp: return "random-gnp";
    case InstanceKind::random_bipartite: return "random-bipartite";
    case InstanceKind::random_triangle_free: return "random-triangle-free";
  }
  return "?";
}

}  // namespace

std::string InstanceSpec::to_string() const {
  char buf[160];
  switch (kind) {
    case InstanceKind::exhaustive_posets:
      std::snprintf(buf, sizeof buf, "%s m=%d..%d", kind_name(kind), n_min, n_max);
      break;
    case InstanceKind::exhaustive_connected:
    case InstanceKind::exhaustive_bipartite:
    case InstanceKind::exhaustive_triangle_free:
      std::snprintf(buf, sizeof buf, "%s n=%d..%d", kind_name(kind), n_min, n_max);
      break;
    default:
      std::snprintf(buf, sizeof buf, "%s n=%d p=%.2f samples=%d seed=%llu",
                    kind_name(kind), n_max, edge_probability, samples,
                    static_cast<unsigned long long>(seed));
  }
  return buf;
}

InstanceSpec InstanceSpec::exhaustive(InstanceKind kind, int n_max, int n_min) {
  InstanceSpec s;
  s.kind = kind;
  s.n_min = n_min;
  s.n_max = n_max;
  s.validate();
  return s;
}

InstanceSpec InstanceSpec::random(InstanceKind kind, int n, double p, int samples,
                                  std::uint64_t seed) {
  InstanceSpec s;
  s.kind = kind;
  s.n_min = s.n_max = n;
  s.edge_probability = p;
  s.samples = samples;
  s.seed = seed;
  s.validate();
  return s;
}

bool is_poset_kind(InstanceKind kind) { return kind == InstanceKind::exhaustive_posets; }

InstanceStream generate(const InstanceSpec& spec) {
  spec.validate();
  InstanceStream out;
  switch (spec.kind) {
    case InstanceKind::exhaustive_connected:
    case InstanceKind::exhaustive_bipartite:
    case InstanceKind::exhaustive_triangle_free: {
      GraphClassFilter f;
      f.connected = true;
      f.bipartite = spec.kind == InstanceKind::exhaustive_bipartite;
      f.triangle_free = spec.kind == InstanceKind::exhaustive_triangle_free;
      for (int n = spec.n_min; n <= spec.n_max; ++n)
        for (Graph& g : exhaustive_graphs(n, f)) out.graphs.push_back(std::move(g));
      return out;
    }
    case InstanceKind::exhaustive_posets: {
      for (int m = spec.n_min; m <= spec.n_max; ++m)
        for (Poset& p : exhaustive_posets(m)) out.posets.push_back(std::move(p));
      return out;
    }
    case InstanceKind::random_gnp:
    case InstanceKind::random_bipartite:
    case InstanceKind::random_triangle_free: {
      std::mt19937_64 rng(spec.seed);
      for (int i = 0; i < spec.samples; ++i) {
        switch (spec.kind) {
          case InstanceKind::random_gnp:
            out.graphs.push_back(random_gnp(spec.n_max, spec.edge_probability, rng));
            break;
          case InstanceKind::random_bipartite:
            out.graphs.push_back(random_bipartite(spec.n_max, spec.edge_probability, rng));
            break;
          default:
            out.graphs.push_back(
                random_triangle_free(spec.n_max, spec.edge_probability, rng));
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("generate: unknown kind");
}

}  // namespace bcl

#include "orient4/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace orient4 {

int Rng::between(int lo, int hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("ORIENT_SEED");
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used, 0);
    if (used == std::string(raw).size()) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

std::vector<MultiGraph> gen_candidates(std::uint64_t seed, int n_min, int n_max, double edge_density, int count) {
  Rng rng(seed);
  std::vector<MultiGraph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    MultiGraph g(rng.between(n_min, n_max));
    for (VertexId a = 0; a < g.vertex_count(); ++a)
      for (VertexId b = a + 1; b < g.vertex_count(); ++b)
        if (rng.chance(edge_density)) g.add_edge(a, b);
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<int> in_scope_gstar(const MultiGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return std::nullopt;
  if (diameter(g) != 4) return std::nullopt;
  const int gs = graph_edge_girth(g);
  if (gs != 4 && gs != 5) return std::nullopt;
  return gs;
}

std::vector<ScopedGraph> filter_in_scope(const std::vector<MultiGraph>& graphs) {
  std::vector<ScopedGraph> out;
  for (const MultiGraph& g : graphs)
    if (const auto gs = in_scope_gstar(g)) out.push_back({g, *gs});
  return out;
}

MultiGraph cycle_graph(int n) {
  MultiGraph g(n);
  for (VertexId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (VertexId x = 0; x < a; ++x)
    for (VertexId y = 0; y < b; ++y) g.add_edge(x, a + y);
  return g;
}

MultiGraph grid_graph(int rows, int cols) {
  MultiGraph g(rows * cols);
  const auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

MultiGraph theta_graph(const std::vector<int>& path_lengths) {
  int n = 2;
  for (int len : path_lengths) {
    if (len < 1) throw GraphError("theta path length must be positive");
    n += len - 1;
  }
  MultiGraph g(n);
  VertexId fresh = 2;
  for (int len : path_lengths) {
    VertexId prev = 0;
    for (int step = 1; step < len; ++step) {
      g.add_edge(prev, fresh);
      prev = fresh++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

MultiGraph prism_chain(int k) {
  if (k < 1) throw GraphError("prism_chain needs at least one pentagon");
  // Pentagon i shares edge (x, y) with pentagon i-1 and adds three vertices.
  MultiGraph g(2 + 3 * k);
  VertexId x = 0, y = 1;
  g.add_edge(x, y);
  for (int i = 0; i < k; ++i) {
    const VertexId p = 2 + 3 * i, q = p + 1, r = p + 2;
    g.add_edge(y, p);
    g.add_edge(p, q);
    g.add_edge(q, r);
    g.add_edge(r, x);
    // next shared edge: (q, r), the side opposite the shared one
    x = r;
    y = q;
  }
  return g;
}

namespace {

// Adds a path of `len` edges from a to b through len-1 new vertices.
void add_ear(MultiGraph& g, VertexId a, VertexId b, int len) {
  MultiGraph out(g.vertex_count() + len - 1);
  for (const Edge& e : g.edges()) out.add_edge(e.a, e.b);
  VertexId prev = a, fresh = g.vertex_count();
  for (int step = 1; step < len; ++step) {
    out.add_edge(prev, fresh);
    prev = fresh++;
  }
  out.add_edge(prev, b);
  g = std::move(out);
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

MultiGraph grow_ear_graph(Rng& rng, int gstar, int target_vertices) {
  MultiGraph g = cycle_graph(gstar);
  int misses = 0;
  while (g.vertex_count() < target_vertices && misses < 200) {
    const VertexId a = rng.between(0, g.vertex_count() - 1);
    const std::vector<int> dist = bfs_distances(g, a);
    std::vector<VertexId> near;
    for (VertexId b = 0; b < g.vertex_count(); ++b)
      if (dist[static_cast<std::size_t>(b)] <= gstar - 1) near.push_back(b);
    const VertexId b = near[static_cast<std::size_t>(rng.between(0, static_cast<int>(near.size()) - 1))];
    const int t = dist[static_cast<std::size_t>(b)];
    int len;
    if (t == 0) {
      if (!rng.chance(0.35)) {  // pendant cycles stretch the diameter fast
        ++misses;
        continue;
      }
      len = gstar;
    } else {
      len = rng.between(1, std::min(3, gstar - t));
      if (len < 1 || (len == 1 && t == 1 && !rng.chance(0.1))) {
        ++misses;
        continue;
      }
    }
    if (g.vertex_count() + len - 1 > target_vertices) {
      ++misses;
      continue;
    }
    MultiGraph next = g;
    add_ear(next, a, b, len);
    if (diameter(next) > 4) {
      ++misses;
      continue;
    }
    g = std::move(next);
  }
  return g;
}

MultiGraph corpus_attempt(std::uint64_t seed, int gstar, std::uint64_t attempt, int n_max) {
  Rng rng(mix(seed ^ mix(static_cast<std::uint64_t>(gstar) * 0x100000001ULL + attempt)));
  // Mostly small and medium graphs, with a tail up to n_max.
  const int hi = rng.chance(0.2) ? n_max : std::min(n_max, 40);
  const int target = rng.between(std::min(8, hi), hi);
  return grow_ear_graph(rng, gstar, target);
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int gstar, int count, int n_max) {
  std::vector<CorpusEntry> out;
  for (std::uint64_t attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 1000ULL * static_cast<std::uint64_t>(count + 1))
      throw std::runtime_error("corpus generator stalled for g*=" + std::to_string(gstar));
    MultiGraph g = corpus_attempt(seed, gstar, attempt, n_max);
    if (g.vertex_count() > n_max) continue;
    const auto gs = in_scope_gstar(g);
    if (gs && *gs == gstar) out.push_back({std::move(g), gstar, attempt});
  }
  return out;
}

}  // namespace orient4

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orient4/graph.hpp"

namespace orient4 {

/// Seeded 64-bit generator with platform-independent derived draws (the
/// standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Seed from ORIENT_SEED when set, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Random simple graphs: n uniform in [n_min, n_max], each pair an edge
/// with probability `edge_density`.
std::vector<MultiGraph> gen_candidates(std::uint64_t seed, int n_min, int n_max, double edge_density, int count);

/// g* when the graph is connected, bridgeless, of diameter 4 and g* in {4,5}.
std::optional<int> in_scope_gstar(const MultiGraph& g);

struct ScopedGraph {
  MultiGraph graph;
  int gstar;
};
std::vector<ScopedGraph> filter_in_scope(const std::vector<MultiGraph>& graphs);

// ---- named families
MultiGraph cycle_graph(int n);
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
/// P_rows x P_cols grid.
MultiGraph grid_graph(int rows, int cols);
/// Two hubs joined by internally disjoint paths of the given lengths.
MultiGraph theta_graph(const std::vector<int>& path_lengths);
/// k pentagons, consecutive ones sharing an edge.
MultiGraph prism_chain(int k);

/// Grows a graph from C_gstar by adding ears whose new edges close cycles of
/// length at most gstar, keeping the diameter at most 4. The result is a
/// candidate: callers still filter it.
MultiGraph grow_ear_graph(Rng& rng, int gstar, int target_vertices);

/// Deterministic list of `count` in-scope graphs with the requested g*,
/// drawn from `seed`. Each entry also reports the attempt index that
/// produced it so single graphs can be regenerated.
struct CorpusEntry {
  MultiGraph graph;
  int gstar;
  std::uint64_t attempt;
};
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int gstar, int count, int n_max = 150);

/// Graph of a single attempt (as numbered by generate_corpus).
MultiGraph corpus_attempt(std::uint64_t seed, int gstar, std::uint64_t attempt, int n_max = 150);

}  // namespace orient4

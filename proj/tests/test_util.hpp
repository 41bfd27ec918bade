#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "orient4/corpus.hpp"
#include "orient4/io.hpp"

namespace orient4::testkit {

inline std::string source_path(const std::string& rel) { return std::string(ORIENT4_SOURCE_DIR) + "/" + rel; }

inline MultiGraph fixture(const std::string& name) { return read_graph_file(source_path("tests/fixtures/" + name + ".txt")); }

/// Sorted graph files of the shipped corpus (every subdirectory).
inline std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(source_path("corpus")))
    if (e.is_regular_file() && e.path().extension() == ".txt") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// A small random in-scope sample, cheap enough for unit tests.
inline std::vector<CorpusEntry> sample(int gstar, int count, std::uint64_t seed = 99, int n_max = 40) {
  return generate_corpus(seed, gstar, count, n_max);
}

struct RsCase {
  MultiGraph graph;
  std::vector<VertexId> r_set;
  std::vector<VertexId> s_set;
};

/// Random graph with disjoint R and S meeting the R-S preconditions: every
/// S vertex has an R neighbour and a neighbour inside S. Extra random edges
/// (including parallel ones) are sprinkled over all pairs.
inline RsCase random_rs_case(Rng& rng) {
  const int n = rng.between(4, 40);
  std::vector<int> role(static_cast<std::size_t>(n));  // 0 R, 1 S, 2 other
  for (int& r : role) r = rng.between(0, 2);
  role[0] = 0;
  role[1] = 1;
  role[2] = 1;
  RsCase c{MultiGraph(n), {}, {}};
  for (VertexId x = 0; x < n; ++x) {
    if (role[static_cast<std::size_t>(x)] == 0) c.r_set.push_back(x);
    if (role[static_cast<std::size_t>(x)] == 1) c.s_set.push_back(x);
  }
  const auto pick = [&](const std::vector<VertexId>& from) {
    return from[static_cast<std::size_t>(rng.between(0, static_cast<int>(from.size()) - 1))];
  };
  for (VertexId w : c.s_set) {
    c.graph.add_edge(w, pick(c.r_set));
    VertexId mate = pick(c.s_set);
    while (mate == w) mate = pick(c.s_set);
    c.graph.add_edge(w, mate);
  }
  const int extra = rng.between(0, 2 * n);
  for (int k = 0; k < extra; ++k) {
    const VertexId a = rng.between(0, n - 1);
    VertexId b = rng.between(0, n - 2);
    if (b >= a) ++b;
    c.graph.add_edge(a, b);
  }
  return c;
}

}  // namespace orient4::testkit

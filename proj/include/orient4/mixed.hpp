#pragma once

#include <string>
#include <vector>

#include "orient4/graph.hpp"

namespace orient4 {

enum class EdgeDirection : unsigned char { Undirected, Forward, Backward };

class ConflictError : public std::runtime_error {
 public:
  ConflictError(const std::string& msg, EdgeId edge) : std::runtime_error(msg), edge_(edge) {}
  EdgeId edge() const { return edge_; }

 private:
  EdgeId edge_;
};

class EmptySetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StageEntry {
  std::string stage;
  std::vector<EdgeId> edges;
};

/// Per-edge direction state over a borrowed MultiGraph. Forward means
/// edge(e).a -> edge(e).b. Directions, once set, are final.
class MixedOrientation {
 public:
  explicit MixedOrientation(const MultiGraph& g);

  const MultiGraph& graph() const { return *graph_; }
  EdgeDirection direction(EdgeId e) const { return directions_[static_cast<std::size_t>(e)]; }
  const std::vector<EdgeDirection>& directions() const { return directions_; }
  const std::vector<StageEntry>& stage_log() const { return stage_log_; }

  bool is_directed(EdgeId e) const { return direction(e) != EdgeDirection::Undirected; }

  /// Tail and head of a directed edge; undefined for undirected ones.
  VertexId tail(EdgeId e) const;
  VertexId head(EdgeId e) const;

  void set_direction(EdgeId e, EdgeDirection dir, const std::string& stage);
  /// Orients e so that it points from `from` (one of its endpoints).
  void orient_from(EdgeId e, VertexId from, const std::string& stage);

  bool is_undirected_vertex(VertexId z) const;
  /// Sorted ids of vertices incident to at least one directed edge.
  std::vector<VertexId> directed_vertices() const;
  int undirected_edge_count() const;

 private:
  const MultiGraph* graph_;
  std::vector<EdgeDirection> directions_;
  std::vector<StageEntry> stage_log_;
};

/// BFS over arcs only; kInfinity where unreachable.
std::vector<int> directed_distances_from(const MixedOrientation& o, VertexId src);
std::vector<int> directed_distances_to(const MixedOrientation& o, VertexId dst);

/// Multi-source variants: distance from the nearest / to the nearest member of `set`.
std::vector<int> directed_distances_from_set(const MixedOrientation& o, const std::vector<VertexId>& set);
std::vector<int> directed_distances_to_set(const MixedOrientation& o, const std::vector<VertexId>& set);

bool is_strong(const MixedOrientation& o);
int directed_diameter(const MixedOrientation& o);

/// max(d(x,S), d(S,x)). Throws EmptySetError for an empty S.
int theta(const MixedOrientation& o, VertexId x, const std::vector<VertexId>& set);

/// Compact arc list for hot loops: out[x] / in[x] in ascending edge order.
struct ArcLists {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;
};
ArcLists arc_lists(const MixedOrientation& o);

}  // namespace orient4

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orient4 {

using VertexId = int;
using EdgeId = int;

/// Hop count; kInfinity marks "unreachable" / "no cycle".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct Edge {
  VertexId a;
  VertexId b;

  VertexId other(VertexId x) const { return x == a ? b : a; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loop-free undirected multigraph. Edge ids follow insertion order and
/// adjacency lists are sorted by (neighbor, edge id), so every traversal in
/// this library is deterministic.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);
  MultiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  EdgeId add_edge(VertexId a, VertexId b);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId x) const {
    return adjacency_[static_cast<std::size_t>(x)];
  }
  int degree(VertexId x) const { return static_cast<int>(incident(x).size()); }

  /// Distinct neighbors of x in ascending order.
  std::vector<VertexId> neighbors(VertexId x) const;
  /// Edge ids joining a and b (possibly several).
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;

  bool operator==(const MultiGraph& other) const { return edge_list_equal(other); }

 private:
  bool edge_list_equal(const MultiGraph& other) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Shortest hop counts from src; kInfinity where unreachable.
std::vector<int> bfs_distances(const MultiGraph& g, VertexId src);

/// BFS that ignores one edge (used for edge girth).
std::vector<int> bfs_distances_without(const MultiGraph& g, VertexId src, EdgeId skipped);

/// Max pairwise distance, kInfinity if disconnected. Empty and single-vertex
/// graphs have diameter 0.
int diameter(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// Bridges via one lowpoint DFS. Parallel edges are told apart by id, so a
/// doubled edge is never a bridge.
std::vector<EdgeId> find_bridges(const MultiGraph& g);

/// Length of the shortest cycle through e, kInfinity for a bridge.
int edge_girth(const MultiGraph& g, EdgeId e);

/// max over edges of edge_girth; kInfinity if any bridge. 0 for edgeless.
int graph_edge_girth(const MultiGraph& g);

std::string format_distance(int d);

}  // namespace orient4

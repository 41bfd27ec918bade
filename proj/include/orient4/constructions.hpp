#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orient4/graph.hpp"
#include "orient4/mixed.hpp"
#include "orient4/partition.hpp"

namespace orient4 {

class InvalidRsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  NotFoundError(const std::string& stage, VertexId vertex, const std::string& what)
      : std::runtime_error("stage " + stage + ": no qualifying walk for vertex " + std::to_string(vertex) + " (" +
                           what + ")"),
        stage_(stage),
        vertex_(vertex) {}
  const std::string& stage() const { return stage_; }
  VertexId vertex() const { return vertex_; }

 private:
  std::string stage_;
  VertexId vertex_;
};

// ------------------------------------------------------------- R-S orientation

enum class Side : unsigned char { None, V1, V2 };

struct RsInstance {
  std::vector<VertexId> r_set;
  std::vector<VertexId> s_set;
  std::vector<EdgeId> forest;
  std::vector<Side> side_of;  // indexed by VertexId
};

/// Validates the instance and builds the BFS spanning forest of G[S]
/// (lowest-id root per component, even depth on V1).
RsInstance plan_rs(const MultiGraph& g, const std::vector<VertexId>& r_set, const std::vector<VertexId>& s_set);
void rs_orient(MixedOrientation& o, const std::vector<VertexId>& r_set, const std::vector<VertexId>& s_set,
               const std::string& stage);

// ---------------------------------------------------------------- mixed walks

struct MixedWalk {
  std::vector<VertexId> vertices;  // a cycle repeats vertices.front() at the end
  std::vector<EdgeId> edges;
  bool cycle = false;
};

/// +1 if every directed step agrees with the listed order, -1 if every one
/// opposes it, 0 if the walk is undirected; nullopt if the walk is not mixed.
std::optional<int> walk_direction(const MixedOrientation& o, const MixedWalk& walk);

/// Orients the undirected steps so the walk becomes a directed path/cycle;
/// a fully undirected walk is oriented in listed order.
void orient_walk(MixedOrientation& o, const MixedWalk& walk, const std::string& stage);

enum class Closure { Open, Closed, Either };

struct WalkQuery {
  std::vector<VertexId> prefix;          // fixed leading vertices
  std::vector<EdgeId> prefix_edges;      // optional fixed leading edges
  std::vector<std::function<bool(VertexId)>> steps;  // predicates for the vertices after the prefix
  Closure closure = Closure::Open;       // Closed adds a final step back to prefix[0]
  /// Extra acceptance test on a complete mixed walk and its direction.
  std::function<bool(const MixedWalk&, int)> accept;
};

/// First mixed walk in ascending (neighbour, edge id) DFS order. With
/// Closure::Either the last step may land on prefix[0] if it satisfies the
/// last predicate.
std::optional<MixedWalk> find_mixed_walk(const MixedOrientation& o, const WalkQuery& query);

/// Lowest-id edge of [w,T] oriented w -> T, every other edge T -> w.
void orient_two_ways(MixedOrientation& o, VertexId w, const Mask& targets, const std::string& stage);

// ---------------------------------------------------------------- the stages

enum class StageId { Cons1, Cons4, Cons5, Cons6, Cons2, Cons3, Cons8_2, Cons8_1, Cons8, Cons8_5, Cons10, Cons12, Cons11 };

std::string stage_tag(StageId stage);

void apply_stage(MixedOrientation& o, const Partition& p, StageId stage);

}  // namespace orient4

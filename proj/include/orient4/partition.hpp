#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orient4/graph.hpp"
#include "orient4/mixed.hpp"

namespace orient4 {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BaseEdge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeId e = 0;
  int gstar = 0;
};

/// Per-vertex (d(w,u), d(w,v)).
struct LayerPartition {
  std::vector<std::pair<int, int>> cell;
  std::vector<int> du;
  std::vector<int> dv;

  std::vector<VertexId> members(int i, int j) const;
};

enum class Checkpoint { D1, D2, D3, D4 };

using Mask = std::vector<char>;

/// Hierarchical label path per vertex, e.g. {"B", "B10", "B10(1)"}. Cell
/// names are globally unique, so a name alone identifies a cell at any depth.
class FineLabels {
 public:
  FineLabels() = default;
  explicit FineLabels(int vertex_count);

  int vertex_count() const { return static_cast<int>(paths_.size()); }
  void push(VertexId w, const std::string& cell);
  const std::vector<std::string>& path(VertexId w) const { return paths_[static_cast<std::size_t>(w)]; }
  std::string joined(VertexId w) const;
  const std::string& finest(VertexId w) const { return path(w).back(); }

  bool in(VertexId w, const std::string& cell) const;
  bool in_any(VertexId w, std::initializer_list<const char*> cells) const;
  /// Sorted members of `cell` (any depth).
  const std::vector<VertexId>& members(const std::string& cell) const;
  std::vector<VertexId> members(std::initializer_list<const char*> cells) const;
  Mask mask(std::initializer_list<const char*> cells) const;
  Mask mask(const std::vector<std::string>& cells) const;
  bool empty(const std::string& cell) const { return members(cell).empty(); }

  std::vector<VertexId> istar;
  /// Vertices that fell outside every sub-cell the definitions allow.
  std::vector<std::string> anomalies;

 private:
  std::vector<std::vector<std::string>> paths_;
  std::map<std::string, std::vector<VertexId>> index_;
};

struct Partition {
  BaseEdge base;
  LayerPartition layers;
  FineLabels labels;
  bool swapped = false;
  /// Orientation snapshots taken at D1..D4, filled in by the pipeline.
  std::vector<MixedOrientation> checkpoints;
};

// --- neighbourhood helpers used by partition, constructions and checks ---

bool has_neighbor_in(const MultiGraph& g, VertexId w, const Mask& set);
int edges_into(const MultiGraph& g, VertexId w, const Mask& set);
/// w has no neighbour inside `set` (w itself may or may not be in it).
bool isolated_in(const MultiGraph& g, VertexId w, const Mask& set);
Mask to_mask(int n, const std::vector<VertexId>& vs);
std::vector<VertexId> from_mask(const Mask& m);
Mask unite(Mask a, const Mask& b);
Mask minus(Mask a, const Mask& b);
/// Hop distance from each vertex to the nearest member of `set`.
std::vector<int> distance_to_set(const MultiGraph& g, const Mask& set);

BaseEdge select_base_edge(const MultiGraph& g);
LayerPartition layer_partition(const MultiGraph& g, const BaseEdge& base);
FineLabels coarse_refine(const MultiGraph& g, const LayerPartition& layers);
void static_refine(const MultiGraph& g, const LayerPartition& layers, FineLabels& labels);
void staged_refine(const MultiGraph& g, const LayerPartition& layers, FineLabels& labels, const MixedOrientation& o,
                   Checkpoint checkpoint);

/// Base edge, layers, coarse and static labels, with the u/v swap applied
/// when |K'| < |L'|.
Partition build_partition(const MultiGraph& g);

/// Independent re-evaluation of every cell predicate plus the structural
/// facts the constructions rely on. Returns human-readable violations.
std::vector<std::string> check_partition(const MultiGraph& g, const Partition& p, bool staged_complete);

/// "vertexId<TAB>label.path" per line.
std::string dump_labels(const FineLabels& labels);

}  // namespace orient4

#include "orient4/mixed.hpp"

#include <algorithm>
#include <deque>

#include "orient4/kernels.hpp"

namespace orient4 {

MixedOrientation::MixedOrientation(const MultiGraph& g)
    : graph_(&g), directions_(static_cast<std::size_t>(g.edge_count()), EdgeDirection::Undirected) {}

VertexId MixedOrientation::tail(EdgeId e) const {
  const Edge& ed = graph_->edge(e);
  return direction(e) == EdgeDirection::Backward ? ed.b : ed.a;
}

VertexId MixedOrientation::head(EdgeId e) const {
  const Edge& ed = graph_->edge(e);
  return direction(e) == EdgeDirection::Backward ? ed.a : ed.b;
}

void MixedOrientation::set_direction(EdgeId e, EdgeDirection dir, const std::string& stage) {
  if (dir == EdgeDirection::Undirected) throw std::invalid_argument("set_direction needs a direction");
  if (e < 0 || e >= graph_->edge_count()) throw std::out_of_range("edge id " + std::to_string(e));
  auto& cur = directions_[static_cast<std::size_t>(e)];
  if (cur == dir) return;
  if (cur != EdgeDirection::Undirected) {
    const Edge& ed = graph_->edge(e);
    const VertexId from = cur == EdgeDirection::Forward ? ed.a : ed.b;
    const VertexId to = ed.other(from);
    throw ConflictError("stage " + stage + ": edge " + std::to_string(e) + " already oriented " +
                            std::to_string(from) + "->" + std::to_string(to),
                        e);
  }
  cur = dir;
  if (stage_log_.empty() || stage_log_.back().stage != stage) stage_log_.push_back({stage, {}});
  stage_log_.back().edges.push_back(e);
}

void MixedOrientation::orient_from(EdgeId e, VertexId from, const std::string& stage) {
  const Edge& ed = graph_->edge(e);
  if (from != ed.a && from != ed.b)
    throw std::invalid_argument("vertex " + std::to_string(from) + " not on edge " + std::to_string(e));
  set_direction(e, from == ed.a ? EdgeDirection::Forward : EdgeDirection::Backward, stage);
}

bool MixedOrientation::is_undirected_vertex(VertexId z) const {
  for (const auto& inc : graph_->incident(z))
    if (is_directed(inc.edge)) return false;
  return true;
}

std::vector<VertexId> MixedOrientation::directed_vertices() const {
  std::vector<char> mark(static_cast<std::size_t>(graph_->vertex_count()), 0);
  for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
    if (!is_directed(e)) continue;
    mark[static_cast<std::size_t>(graph_->edge(e).a)] = 1;
    mark[static_cast<std::size_t>(graph_->edge(e).b)] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId x = 0; x < graph_->vertex_count(); ++x)
    if (mark[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

int MixedOrientation::undirected_edge_count() const {
  return static_cast<int>(std::count(directions_.begin(), directions_.end(), EdgeDirection::Undirected));
}

ArcLists arc_lists(const MixedOrientation& o) {
  const MultiGraph& g = o.graph();
  ArcLists arcs;
  arcs.out.resize(static_cast<std::size_t>(g.vertex_count()));
  arcs.in.resize(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!o.is_directed(e)) continue;
    arcs.out[static_cast<std::size_t>(o.tail(e))].push_back(o.head(e));
    arcs.in[static_cast<std::size_t>(o.head(e))].push_back(o.tail(e));
  }
  return arcs;
}

namespace {

std::vector<int> multi_bfs(const std::vector<std::vector<VertexId>>& adj, const std::vector<VertexId>& sources) {
  std::vector<int> dist(adj.size(), kInfinity);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[static_cast<std::size_t>(x)]) {
      auto& d = dist[static_cast<std::size_t>(y)];
      if (d == kInfinity) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> directed_distances_from(const MixedOrientation& o, VertexId src) {
  return multi_bfs(arc_lists(o).out, {src});
}

std::vector<int> directed_distances_to(const MixedOrientation& o, VertexId dst) {
  return multi_bfs(arc_lists(o).in, {dst});
}

std::vector<int> directed_distances_from_set(const MixedOrientation& o, const std::vector<VertexId>& set) {
  return multi_bfs(arc_lists(o).out, set);
}

std::vector<int> directed_distances_to_set(const MixedOrientation& o, const std::vector<VertexId>& set) {
  return multi_bfs(arc_lists(o).in, set);
}

bool is_strong(const MixedOrientation& o) {
  const int n = o.graph().vertex_count();
  if (n <= 1) return true;
  const auto arcs = arc_lists(o);
  auto all_reached = [](const std::vector<int>& d) {
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kInfinity; });
  };
  return all_reached(multi_bfs(arcs.out, {0})) && all_reached(multi_bfs(arcs.in, {0}));
}

int directed_diameter(const MixedOrientation& o) { return kernels::directed_diameter_parallel(arc_lists(o).out); }

int theta(const MixedOrientation& o, VertexId x, const std::vector<VertexId>& set) {
  if (set.empty()) throw EmptySetError("theta over an empty set");
  const auto arcs = arc_lists(o);
  const auto from_x = multi_bfs(arcs.out, {x});
  const auto to_x = multi_bfs(arcs.in, {x});
  int out = kInfinity, in = kInfinity;
  for (VertexId s : set) {
    out = std::min(out, from_x[static_cast<std::size_t>(s)]);
    in = std::min(in, to_x[static_cast<std::size_t>(s)]);
  }
  return std::max(out, in);
}

}  // namespace orient4

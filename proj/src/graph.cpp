#include "orient4/graph.hpp"

#include <algorithm>
#include <deque>

namespace orient4 {

MultiGraph::MultiGraph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
}

MultiGraph::MultiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : MultiGraph(vertex_count) {
  for (auto [a, b] : edges) add_edge(a, b);
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw GraphError("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
  if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
  const EdgeId id = edge_count();
  edges_.push_back({a, b});
  auto insert_sorted = [](std::vector<Incidence>& list, Incidence inc) {
    auto pos = std::upper_bound(list.begin(), list.end(), inc, [](const Incidence& x, const Incidence& y) {
      return std::pair(x.neighbor, x.edge) < std::pair(y.neighbor, y.edge);
    });
    list.insert(pos, inc);
  };
  insert_sorted(adjacency_[static_cast<std::size_t>(a)], {b, id});
  insert_sorted(adjacency_[static_cast<std::size_t>(b)], {a, id});
  return id;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId x) const {
  std::vector<VertexId> out;
  for (const auto& inc : incident(x))
    if (out.empty() || out.back() != inc.neighbor) out.push_back(inc.neighbor);
  return out;
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (const auto& inc : incident(a))
    if (inc.neighbor == b) out.push_back(inc.edge);
  return out;
}

bool MultiGraph::edge_list_equal(const MultiGraph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edge(e).a != other.edge(e).a || edge(e).b != other.edge(e).b) return false;
  return true;
}

std::vector<int> bfs_distances_without(const MultiGraph& g, VertexId src, EdgeId skipped) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  std::deque<VertexId> queue;
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (inc.edge == skipped) continue;
      auto& d = dist[static_cast<std::size_t>(inc.neighbor)];
      if (d == kInfinity) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const MultiGraph& g, VertexId src) {
  return bfs_distances_without(g, src, -1);
}

int diameter(const MultiGraph& g) {
  int best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (int d : dist) best = std::max(best, d);
    if (best == kInfinity) return kInfinity;
  }
  return best;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

std::vector<EdgeId> find_bridges(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> discovery(n, -1), low(n, 0);
  std::vector<EdgeId> bridges;
  int timer = 0;

  // Iterative DFS; the parent is tracked by edge id so parallel edges count as back edges.
  struct Frame {
    VertexId vertex;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (discovery[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    discovery[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto inc = g.incident(top.vertex);
      if (top.next < inc.size()) {
        const Incidence step = inc[top.next++];
        if (step.edge == top.via) continue;
        const auto y = static_cast<std::size_t>(step.neighbor);
        if (discovery[y] >= 0) {
          low[static_cast<std::size_t>(top.vertex)] =
              std::min(low[static_cast<std::size_t>(top.vertex)], discovery[y]);
        } else {
          discovery[y] = low[y] = timer++;
          stack.push_back({step.neighbor, step.edge, 0});
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const auto parent = static_cast<std::size_t>(stack.back().vertex);
      const auto child = static_cast<std::size_t>(done.vertex);
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] > discovery[parent]) bridges.push_back(done.via);
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

int edge_girth(const MultiGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  const auto dist = bfs_distances_without(g, ed.a, e);
  const int d = dist[static_cast<std::size_t>(ed.b)];
  return d == kInfinity ? kInfinity : d + 1;
}

int graph_edge_girth(const MultiGraph& g) {
  int best = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    best = std::max(best, edge_girth(g, e));
    if (best == kInfinity) break;
  }
  return best;
}

std::string format_distance(int d) { return d == kInfinity ? "inf" : std::to_string(d); }

}  // namespace orient4

#include <algorithm>
#include <deque>

#include "orient4/constructions.hpp"

namespace orient4 {

RsInstance plan_rs(const MultiGraph& g, const std::vector<VertexId>& r_set, const std::vector<VertexId>& s_set) {
  const int n = g.vertex_count();
  const Mask r = to_mask(n, r_set), s = to_mask(n, s_set);
  RsInstance inst;
  inst.r_set = from_mask(r);
  inst.s_set = from_mask(s);
  inst.side_of.assign(static_cast<std::size_t>(n), Side::None);
  for (VertexId w : inst.s_set) {
    if (r[static_cast<std::size_t>(w)]) throw InvalidRsError("vertex " + std::to_string(w) + " lies in both R and S");
    if (!has_neighbor_in(g, w, r)) throw InvalidRsError("vertex " + std::to_string(w) + " has no neighbour in R");
    if (isolated_in(g, w, s)) throw InvalidRsError("vertex " + std::to_string(w) + " is isolated in G[S]");
  }
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  for (VertexId root : inst.s_set) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        const auto y = static_cast<std::size_t>(inc.neighbor);
        if (!s[y] || depth[y] >= 0) continue;
        depth[y] = depth[static_cast<std::size_t>(x)] + 1;
        inst.forest.push_back(inc.edge);
        queue.push_back(inc.neighbor);
      }
    }
  }
  for (VertexId w : inst.s_set)
    inst.side_of[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)] % 2 == 0 ? Side::V1 : Side::V2;
  std::sort(inst.forest.begin(), inst.forest.end());
  return inst;
}

void rs_orient(MixedOrientation& o, const std::vector<VertexId>& r_set, const std::vector<VertexId>& s_set,
               const std::string& stage) {
  if (s_set.empty()) return;
  const MultiGraph& g = o.graph();
  const RsInstance inst = plan_rs(g, r_set, s_set);
  const Mask r = to_mask(g.vertex_count(), inst.r_set);
  for (VertexId w : inst.s_set) {
    const bool first = inst.side_of[static_cast<std::size_t>(w)] == Side::V1;
    for (const auto& inc : g.incident(w)) {
      if (!r[static_cast<std::size_t>(inc.neighbor)]) continue;
      o.orient_from(inc.edge, first ? inc.neighbor : w, stage);
    }
  }
  for (EdgeId e : inst.forest) {
    const Edge& ed = g.edge(e);
    o.orient_from(e, inst.side_of[static_cast<std::size_t>(ed.a)] == Side::V1 ? ed.a : ed.b, stage);
  }
}

std::optional<int> walk_direction(const MixedOrientation& o, const MixedWalk& walk) {
  int sign = 0;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const EdgeId e = walk.edges[i];
    if (!o.is_directed(e)) continue;
    const int s = o.tail(e) == walk.vertices[i] ? 1 : -1;
    if (sign != 0 && s != sign) return std::nullopt;
    sign = s;
  }
  return sign;
}

void orient_walk(MixedOrientation& o, const MixedWalk& walk, const std::string& stage) {
  const auto dir = walk_direction(o, walk);
  if (!dir) throw ConflictError("stage " + stage + ": walk is not mixed", walk.edges.front());
  const bool forward = *dir >= 0;
  for (std::size_t i = 0; i < walk.edges.size(); ++i)
    o.orient_from(walk.edges[i], forward ? walk.vertices[i] : walk.vertices[i + 1], stage);
}

namespace {

class WalkSearch {
 public:
  WalkSearch(const MixedOrientation& o, const WalkQuery& q)
      : o_(o),
        g_(o.graph()),
        q_(q),
        used_vertex_(static_cast<std::size_t>(g_.vertex_count()), 0),
        used_edge_(static_cast<std::size_t>(g_.edge_count()), 0) {}

  std::optional<MixedWalk> run() {
    if (q_.prefix.empty()) return std::nullopt;
    total_ = q_.prefix.size() + q_.steps.size();
    walk_.vertices.push_back(q_.prefix[0]);
    used_vertex_[static_cast<std::size_t>(q_.prefix[0])] = 1;
    if (extend(1, 0)) return walk_;
    return std::nullopt;
  }

 private:
  // Direction of the step prev -> next over e, folded into the running sign.
  std::optional<int> fold(int sign, EdgeId e, VertexId prev) const {
    if (!o_.is_directed(e)) return sign;
    const int s = o_.tail(e) == prev ? 1 : -1;
    if (sign != 0 && s != sign) return std::nullopt;
    return s;
  }

  bool finish(int sign) {
    if (q_.closure == Closure::Closed) {
      const VertexId last = walk_.vertices.back();
      const VertexId start = q_.prefix[0];
      for (const auto& inc : g_.incident(last)) {
        if (inc.neighbor != start || used_edge_[static_cast<std::size_t>(inc.edge)]) continue;
        const auto next = fold(sign, inc.edge, last);
        if (!next) continue;
        walk_.vertices.push_back(start);
        walk_.edges.push_back(inc.edge);
        walk_.cycle = true;
        if (!q_.accept || q_.accept(walk_, *next)) return true;
        walk_.vertices.pop_back();
        walk_.edges.pop_back();
        walk_.cycle = false;
      }
      return false;
    }
    return !q_.accept || q_.accept(walk_, sign);
  }

  bool extend(std::size_t k, int sign) {
    if (k == total_) return finish(sign);
    const VertexId prev = walk_.vertices.back();
    const bool fixed = k < q_.prefix.size();
    const bool last = k + 1 == total_;
    for (const auto& inc : g_.incident(prev)) {
      const VertexId y = inc.neighbor;
      const auto yi = static_cast<std::size_t>(y);
      if (used_edge_[static_cast<std::size_t>(inc.edge)]) continue;
      if (fixed) {
        if (y != q_.prefix[k]) continue;
        if (k - 1 < q_.prefix_edges.size() && inc.edge != q_.prefix_edges[k - 1]) continue;
        if (used_vertex_[yi]) continue;
      } else {
        if (!q_.steps[k - q_.prefix.size()](y)) continue;
        const bool closes = y == q_.prefix[0] && last && q_.closure == Closure::Either && walk_.vertices.size() > 2;
        if (used_vertex_[yi] && !closes) continue;
      }
      const auto next = fold(sign, inc.edge, prev);
      if (!next) continue;
      const bool closing = used_vertex_[yi] != 0;
      walk_.vertices.push_back(y);
      walk_.edges.push_back(inc.edge);
      used_edge_[static_cast<std::size_t>(inc.edge)] = 1;
      if (!closing) used_vertex_[yi] = 1;
      walk_.cycle = closing;
      if (closing ? (!q_.accept || q_.accept(walk_, *next)) : extend(k + 1, *next)) return true;
      walk_.cycle = false;
      if (!closing) used_vertex_[yi] = 0;
      used_edge_[static_cast<std::size_t>(inc.edge)] = 0;
      walk_.vertices.pop_back();
      walk_.edges.pop_back();
    }
    return false;
  }

  const MixedOrientation& o_;
  const MultiGraph& g_;
  const WalkQuery& q_;
  std::vector<char> used_vertex_;
  std::vector<char> used_edge_;
  MixedWalk walk_;
  std::size_t total_ = 0;
};

}  // namespace

std::optional<MixedWalk> find_mixed_walk(const MixedOrientation& o, const WalkQuery& query) {
  return WalkSearch(o, query).run();
}

void orient_two_ways(MixedOrientation& o, VertexId w, const Mask& targets, const std::string& stage) {
  std::vector<EdgeId> edges;
  for (const auto& inc : o.graph().incident(w))
    if (targets[static_cast<std::size_t>(inc.neighbor)]) edges.push_back(inc.edge);
  if (edges.size() < 2)
    throw PreconditionError("stage " + stage + ": vertex " + std::to_string(w) + " has " +
                            std::to_string(edges.size()) + " edge(s) to the target set, two ways needs 2");
  std::sort(edges.begin(), edges.end());
  o.orient_from(edges.front(), w, stage);
  for (std::size_t i = 1; i < edges.size(); ++i) o.orient_from(edges[i], o.graph().edge(edges[i]).other(w), stage);
}

}  // namespace orient4

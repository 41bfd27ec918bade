#include "orient4/partition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace orient4 {

// ---------------------------------------------------------------- helpers

std::vector<VertexId> LayerPartition::members(int i, int j) const {
  std::vector<VertexId> out;
  for (VertexId w = 0; w < static_cast<VertexId>(cell.size()); ++w)
    if (cell[static_cast<std::size_t>(w)] == std::pair(i, j)) out.push_back(w);
  return out;
}

FineLabels::FineLabels(int vertex_count) : paths_(static_cast<std::size_t>(vertex_count)) {}

void FineLabels::push(VertexId w, const std::string& cell) {
  paths_[static_cast<std::size_t>(w)].push_back(cell);
  auto& list = index_[cell];
  list.insert(std::upper_bound(list.begin(), list.end(), w), w);
}

std::string FineLabels::joined(VertexId w) const {
  std::string out;
  for (const auto& part : path(w)) {
    if (!out.empty()) out += '.';
    out += part;
  }
  return out;
}

bool FineLabels::in(VertexId w, const std::string& cell) const {
  const auto& p = path(w);
  return std::find(p.begin(), p.end(), cell) != p.end();
}

bool FineLabels::in_any(VertexId w, std::initializer_list<const char*> cells) const {
  for (const auto& part : path(w))
    for (const char* c : cells)
      if (part == c) return true;
  return false;
}

const std::vector<VertexId>& FineLabels::members(const std::string& cell) const {
  static const std::vector<VertexId> kEmpty;
  auto it = index_.find(cell);
  return it == index_.end() ? kEmpty : it->second;
}

std::vector<VertexId> FineLabels::members(std::initializer_list<const char*> cells) const {
  return from_mask(mask(cells));
}

Mask FineLabels::mask(std::initializer_list<const char*> cells) const {
  Mask m(paths_.size(), 0);
  for (const char* c : cells)
    for (VertexId w : members(c)) m[static_cast<std::size_t>(w)] = 1;
  return m;
}

Mask FineLabels::mask(const std::vector<std::string>& cells) const {
  Mask m(paths_.size(), 0);
  for (const auto& c : cells)
    for (VertexId w : members(c)) m[static_cast<std::size_t>(w)] = 1;
  return m;
}

bool has_neighbor_in(const MultiGraph& g, VertexId w, const Mask& set) {
  for (const auto& inc : g.incident(w))
    if (set[static_cast<std::size_t>(inc.neighbor)]) return true;
  return false;
}

int edges_into(const MultiGraph& g, VertexId w, const Mask& set) {
  int count = 0;
  for (const auto& inc : g.incident(w))
    if (set[static_cast<std::size_t>(inc.neighbor)]) ++count;
  return count;
}

bool isolated_in(const MultiGraph& g, VertexId w, const Mask& set) { return !has_neighbor_in(g, w, set); }

Mask to_mask(int n, const std::vector<VertexId>& vs) {
  Mask m(static_cast<std::size_t>(n), 0);
  for (VertexId w : vs) m[static_cast<std::size_t>(w)] = 1;
  return m;
}

std::vector<VertexId> from_mask(const Mask& m) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<VertexId>(i));
  return out;
}

Mask unite(Mask a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<char>(a[i] || b[i]);
  return a;
}

Mask minus(Mask a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<char>(a[i] && !b[i]);
  return a;
}

std::vector<int> distance_to_set(const MultiGraph& g, const Mask& set) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  std::deque<VertexId> queue;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (!set[static_cast<std::size_t>(w)]) continue;
    dist[static_cast<std::size_t>(w)] = 0;
    queue.push_back(w);
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      auto& d = dist[static_cast<std::size_t>(inc.neighbor)];
      if (d == kInfinity) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

namespace {

using Pred = std::function<bool(VertexId)>;

// Moves every member of `rest` satisfying `pred` into `child`. The predicate
// is evaluated for all of `rest` before any label is pushed.
void split(FineLabels& labels, std::vector<VertexId>& rest, const std::string& child, const Pred& pred) {
  std::vector<VertexId> take, keep;
  for (VertexId w : rest) (pred(w) ? take : keep).push_back(w);
  for (VertexId w : take) labels.push(w, child);
  rest = std::move(keep);
}

void split_isolated(const MultiGraph& g, FineLabels& labels, std::vector<VertexId>& rest, const std::string& isolated,
                    const std::string& joined) {
  const Mask m = to_mask(g.vertex_count(), rest);
  std::vector<VertexId> a, b;
  for (VertexId w : rest) (isolated_in(g, w, m) ? a : b).push_back(w);
  for (VertexId w : a) labels.push(w, isolated);
  for (VertexId w : b) labels.push(w, joined);
  rest.clear();
}

void leftover(FineLabels& labels, std::vector<VertexId>& rest, const std::string& parent) {
  for (VertexId w : rest) {
    labels.push(w, parent + "?");
    labels.anomalies.push_back("vertex " + std::to_string(w) + " fits no sub-cell of " + parent);
  }
  rest.clear();
}

Pred nb(const MultiGraph& g, const Mask& m) {
  return [&g, m](VertexId w) { return has_neighbor_in(g, w, m); };
}

std::vector<VertexId> members_copy(const FineLabels& labels, const std::string& cell) { return labels.members(cell); }

}  // namespace

// ----------------------------------------------------------- base + layers

BaseEdge select_base_edge(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (const auto bridges = find_bridges(g); !bridges.empty())
    throw PreconditionError("graph has a bridge (edge " + std::to_string(bridges.front()) + ")");
  const int d = diameter(g);
  if (d != 4) throw PreconditionError("diameter is " + format_distance(d) + ", expected 4");
  std::vector<int> girth(static_cast<std::size_t>(g.edge_count()));
  int gstar = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    girth[static_cast<std::size_t>(e)] = edge_girth(g, e);
    gstar = std::max(gstar, girth[static_cast<std::size_t>(e)]);
  }
  if (gstar != 4 && gstar != 5)
    throw PreconditionError("edge girth g*=" + format_distance(gstar) + " is outside {4,5}");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (girth[static_cast<std::size_t>(e)] != gstar) continue;
    const Edge& ed = g.edge(e);
    return {std::min(ed.a, ed.b), std::max(ed.a, ed.b), e, gstar};
  }
  throw InternalError("no edge attains g*");
}

LayerPartition layer_partition(const MultiGraph& g, const BaseEdge& base) {
  LayerPartition layers;
  layers.du = bfs_distances(g, base.u);
  layers.dv = bfs_distances(g, base.v);
  static const std::pair<int, int> kAllowed[] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}, {2, 3},
                                                 {3, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 4}};
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const std::pair<int, int> c{layers.du[static_cast<std::size_t>(w)], layers.dv[static_cast<std::size_t>(w)]};
    if (std::find(std::begin(kAllowed), std::end(kAllowed), c) == std::end(kAllowed))
      throw InternalError("vertex " + std::to_string(w) + " lies in S(" + format_distance(c.first) + "," +
                          format_distance(c.second) + ")");
    layers.cell.push_back(c);
  }
  return layers;
}

// ------------------------------------------------------------- coarse cells

FineLabels coarse_refine(const MultiGraph& g, const LayerPartition& layers) {
  const int n = g.vertex_count();
  FineLabels labels(n);
  auto layer_mask = [&](int i, int j) { return to_mask(n, layers.members(i, j)); };
  // N(w) within `allowed`
  auto contained = [&](VertexId w, const Mask& allowed) {
    for (const auto& inc : g.incident(w))
      if (!allowed[static_cast<std::size_t>(inc.neighbor)]) return false;
    return true;
  };
  auto split_primed = [&](int i, int j, const Mask& allowed, const std::string& primed, const std::string& plain) {
    for (VertexId w : layers.members(i, j)) labels.push(w, contained(w, allowed) ? primed : plain);
  };

  for (VertexId w : layers.members(0, 1)) labels.push(w, "u");
  for (VertexId w : layers.members(1, 0)) labels.push(w, "v");
  for (VertexId w : layers.members(2, 2)) labels.push(w, "S22");

  split_primed(1, 2, unite(layer_mask(1, 2), layer_mask(0, 1)), "A'", "A");
  split_primed(2, 1, unite(layer_mask(2, 1), layer_mask(1, 0)), "B'", "B");
  split_primed(2, 3, unite(layer_mask(2, 3), labels.mask({"A"})), "I'", "I");
  split_primed(3, 2, unite(layer_mask(3, 2), labels.mask({"B"})), "J'", "J");
  split_primed(3, 4, unite(layer_mask(3, 4), labels.mask({"I"})), "K'", "K");
  split_primed(4, 3, unite(layer_mask(4, 3), labels.mask({"J"})), "L'", "L");

  const Mask x_targets = labels.mask({"S22", "I", "J", "K", "L"});
  for (VertexId w : layers.members(3, 3)) labels.push(w, edges_into(g, w, x_targets) == 1 ? "X'" : "X");
  const Mask m_targets = unite(layer_mask(3, 3), labels.mask({"K", "L"}));
  for (VertexId w : layers.members(4, 4)) labels.push(w, edges_into(g, w, m_targets) == 1 ? "M'" : "M");
  return labels;
}

// ------------------------------------------------------------- static cells

void static_refine(const MultiGraph& g, const LayerPartition& layers, FineLabels& labels) {
  const int n = g.vertex_count();
  const Mask s22 = labels.mask({"S22"});
  const Mask s33 = to_mask(n, layers.members(3, 3));
  auto m = [&](std::initializer_list<const char*> cells) { return labels.mask(cells); };

  {  // M
    auto rest = members_copy(labels, "M");
    split(labels, rest, "M1", nb(g, m({"K"})));
    split(labels, rest, "M2", nb(g, m({"L"})));
    split(labels, rest, "M3", [](VertexId) { return true; });
  }
  {  // X'
    auto rest = members_copy(labels, "X'");
    split(labels, rest, "X'1", nb(g, m({"M1"})));
    split(labels, rest, "X'2", nb(g, m({"M2"})));
    split(labels, rest, "X'3", nb(g, m({"X"})));
    split_isolated(g, labels, rest, "X'4", "X'5");
  }
  {  // K
    auto rest = members_copy(labels, "K");
    split(labels, rest, "K1", nb(g, unite(s33, m({"L"}))));
    split(labels, rest, "K2", nb(g, m({"K1"})));
    split(labels, rest, "K3", [](VertexId) { return true; });
  }
  {  // I
    auto rest = members_copy(labels, "I");
    split(labels, rest, "I1", nb(g, unite(s22, m({"J"}))));
    split(labels, rest, "I2", nb(g, s33));
    split(labels, rest, "I3", nb(g, m({"I1"})));
    split(labels, rest, "I4", nb(g, m({"I2", "K1"})));
    split(labels, rest, "I5", nb(g, m({"K2", "K3"})));
    split(labels, rest, "I6", [](VertexId) { return true; });
  }
  auto jrest = members_copy(labels, "J");
  split(labels, jrest, "J1", nb(g, unite(s22, m({"I"}))));
  split(labels, jrest, "J2", nb(g, s33));
  split(labels, jrest, "J3", nb(g, m({"J1"})));
  {  // L
    auto rest = members_copy(labels, "L");
    split(labels, rest, "L1", nb(g, m({"K"})));
    split(labels, rest, "L2", nb(g, m({"L1", "M1"})));
    const Mask j1 = m({"J1"}), lp = m({"L'"});
    split(labels, rest, "L3", [&](VertexId w) { return has_neighbor_in(g, w, j1) && has_neighbor_in(g, w, lp); });
    split(labels, rest, "L4", [](VertexId) { return true; });
  }
  split(labels, jrest, "J4", nb(g, m({"J2", "L1"})));
  split(labels, jrest, "J5", nb(g, m({"L2", "L3", "L4"})));
  split(labels, jrest, "J6", [](VertexId) { return true; });
  {  // A
    auto rest = members_copy(labels, "A");
    split(labels, rest, "A1", nb(g, m({"B"})));
    split(labels, rest, "A2", nb(g, s22));
    split(labels, rest, "A3", nb(g, m({"A1"})));
    for (int j = 1; j <= 5; ++j)
      split(labels, rest, "A" + std::to_string(3 + j), nb(g, labels.mask(std::vector<std::string>{"I" + std::to_string(j)})));
    split(labels, rest, "A9", [](VertexId) { return true; });
  }
  {  // B
    auto rest = members_copy(labels, "B");
    split(labels, rest, "B1", nb(g, m({"A"})));
    split(labels, rest, "B2", nb(g, s22));
    split(labels, rest, "B3", nb(g, m({"B1"})));
    for (int j = 1; j <= 6; ++j)
      split(labels, rest, "B" + std::to_string(3 + j), nb(g, labels.mask(std::vector<std::string>{"J" + std::to_string(j)})));
    split(labels, rest, "B10", [](VertexId) { return true; });
    auto b10 = members_copy(labels, "B10");
    split_isolated(g, labels, b10, "B10(1)", "B10(2)");
  }
  {  // I6
    auto rest = members_copy(labels, "I6");
    split(labels, rest, "I61", nb(g, m({"A1", "A2", "A3"})));
    split(labels, rest, "I62", [](VertexId) { return true; });
    auto i61 = members_copy(labels, "I61");
    split(labels, i61, "I61(1)", nb(g, m({"I62"})));
    split_isolated(g, labels, i61, "I61(2)", "I61(3)");
  }
  {  // X by the connection pattern used when orienting it
    const Mask ij = m({"I", "J"}), km1 = m({"K", "M1"});
    for (VertexId w : labels.members("X")) {
      const int to22 = edges_into(g, w, s22);
      if (to22 != 1 || has_neighbor_in(g, w, ij))
        labels.push(w, "X(i)");
      else if (has_neighbor_in(g, w, km1))
        labels.push(w, "X(ii)");
      else
        labels.push(w, "X(iii)");
    }
  }
  {  // L'
    const auto dk = distance_to_set(g, m({"K'"}));
    auto rest = members_copy(labels, "L'");
    split(labels, rest, "L'1", nb(g, m({"L1", "L2", "L3"})));
    const Mask l4 = m({"L4"}), x = m({"X"}), i3 = m({"I1", "I2", "K1"}), kp = m({"K'"});
    auto step = [&](VertexId from, const Mask& cell, int want, const std::function<bool(VertexId)>& next) {
      for (const auto& inc : g.incident(from)) {
        const auto y = static_cast<std::size_t>(inc.neighbor);
        if (cell[y] && dk[y] == want && next(inc.neighbor)) return true;
      }
      return false;
    };
    split(labels, rest, "L'2", [&](VertexId w) {
      if (dk[static_cast<std::size_t>(w)] != 4) return false;
      return step(w, l4, 3, [&](VertexId i1) {
        return step(i1, x, 2, [&](VertexId i2) {
          return step(i2, i3, 1, [&](VertexId i3v) { return step(i3v, kp, 0, [](VertexId) { return true; }); });
        });
      });
    });
    const Mask rest_mask = to_mask(n, rest);
    split(labels, rest, "L'3", [&](VertexId w) { return isolated_in(g, w, rest_mask); });
    split(labels, rest, "L'4", [&](VertexId w) { return dk[static_cast<std::size_t>(w)] == 3; });
    split(labels, rest, "L'5", [&](VertexId w) { return dk[static_cast<std::size_t>(w)] == 4; });
    leftover(labels, rest, "L'");

    auto l1 = members_copy(labels, "L'1");
    split(labels, l1, "L'11", nb(g, m({"L1", "L3"})));
    split(labels, l1, "L'12", nb(g, m({"J1"})));
    split(labels, l1, "L'13", [](VertexId) { return true; });

    auto l4s = members_copy(labels, "L'4");
    auto l5s = members_copy(labels, "L'5");
    const Mask l5m = m({"L'5"}), l4m = m({"L'4"});
    split(labels, l4s, "L'41", nb(g, l5m));
    split_isolated(g, labels, l4s, "L'42", "L'43");
    split(labels, l5s, "L'51", nb(g, l4m));
    const Mask l5_rest = to_mask(n, l5s), j6 = m({"J6"});
    split(labels, l5s, "L'52",
          [&](VertexId w) { return isolated_in(g, w, l5_rest) || has_neighbor_in(g, w, j6); });
    split_isolated(g, labels, l5s, "L'53", "L'54");
  }
}

// ------------------------------------------------------------- staged cells

void staged_refine(const MultiGraph& g, const LayerPartition& layers, FineLabels& labels, const MixedOrientation& o,
                   Checkpoint checkpoint) {
  (void)layers;
  const int n = g.vertex_count();
  const Mask directed = to_mask(n, o.directed_vertices());
  auto in_d = [&](VertexId w) { return directed[static_cast<std::size_t>(w)] != 0; };
  auto m = [&](std::initializer_list<const char*> cells) { return labels.mask(cells); };
  auto all = [](VertexId) { return true; };

  switch (checkpoint) {
    case Checkpoint::D1: {
      auto m3 = members_copy(labels, "M3");
      split(labels, m3, "M31", in_d);
      split(labels, m3, "M32", all);
      auto mp = members_copy(labels, "M'");
      split(labels, mp, "M'1", in_d);
      split(labels, mp, "M'2", all);
      auto m2 = members_copy(labels, "M'2");
      split(labels, m2, "M'21", nb(g, m({"M"})));
      split_isolated(g, labels, m2, "M'22", "M'23");
      break;
    }
    case Checkpoint::D2: {
      auto bp = members_copy(labels, "B'");
      split(labels, bp, "B'1", in_d);
      split_isolated(g, labels, bp, "B'2", "B'3");

      auto jp = members_copy(labels, "J'");
      split(labels, jp, "J'1", in_d);
      split(labels, jp, "J'2", nb(g, m({"J1", "J2", "J3"})));
      split(labels, jp, "J'3", nb(g, m({"J4", "J5", "J6"})));
      const Mask jrest = to_mask(n, jp);
      split(labels, jp, "J'4", [&](VertexId w) { return isolated_in(g, w, jrest); });
      split(labels, jp, "J'5", nb(g, m({"B1", "B2", "B3", "B4", "B5", "B6"})));
      split(labels, jp, "J'6", nb(g, m({"B7", "B8", "B9", "B10"})));
      leftover(labels, jp, "J'");

      const Mask b16 = m({"B1", "B2", "B3", "B4", "B5", "B6"});
      auto j3 = members_copy(labels, "J'3");
      split(labels, j3, "J'31", nb(g, b16));
      split(labels, j3, "J'32", all);
      auto j4 = members_copy(labels, "J'4");
      split(labels, j4, "J'41", nb(g, b16));
      split(labels, j4, "J'42", all);
      const Mask j5m = m({"J'5"}), j6m = m({"J'6"});
      auto j5 = members_copy(labels, "J'5");
      auto j6 = members_copy(labels, "J'6");
      split(labels, j5, "J'51", nb(g, j6m));
      split_isolated(g, labels, j5, "J'52", "J'53");
      split(labels, j6, "J'61", nb(g, j5m));
      split_isolated(g, labels, j6, "J'62", "J'63");
      break;
    }
    case Checkpoint::D3: {
      const Mask a = m({"A"});
      auto i612 = members_copy(labels, "I61(2)");
      split(labels, i612, "I61(21)", [&](VertexId w) {
        for (const auto& inc : g.incident(w))
          if (a[static_cast<std::size_t>(inc.neighbor)] && o.is_directed(inc.edge) && o.head(inc.edge) == w)
            return true;
        return false;
      });
      split(labels, i612, "I61(22)", all);

      auto ip = members_copy(labels, "I'");
      split(labels, ip, "I'1", in_d);
      split(labels, ip, "I'2", nb(g, minus(m({"I61"}), m({"I61(22)"}))));

      auto i62 = members_copy(labels, "I62");
      split(labels, i62, "I62(1)", nb(g, m({"I61"})));
      split(labels, i62, "I62(2)", in_d);
      split(labels, i62, "I62(3)", all);

      auto a9 = members_copy(labels, "A9");
      split(labels, a9, "A91", nb(g, m({"I'1"})));
      split(labels, a9, "A92", nb(g, m({"I'2"})));
      split(labels, a9, "A93", nb(g, m({"I61", "I62(1)", "I62(2)"})));
      split_isolated(g, labels, a9, "A94", "A95");

      auto kp = members_copy(labels, "K'");
      split(labels, kp, "K'1", in_d);
      break;
    }
    case Checkpoint::D4: {
      auto ap = members_copy(labels, "A'");
      split(labels, ap, "A'1", in_d);
      split_isolated(g, labels, ap, "A'2", "A'3");

      std::vector<VertexId> ip;
      for (VertexId w : labels.members("I'"))
        if (!labels.in_any(w, {"I'1", "I'2"})) ip.push_back(w);
      const Mask i_minus_i623 = minus(m({"I"}), m({"I62(3)"}));
      split(labels, ip, "I'3", in_d);
      split(labels, ip, "I'4", nb(g, i_minus_i623));
      split(labels, ip, "I'5", nb(g, m({"I62(3)"})));
      const Mask irest = to_mask(n, ip);
      split(labels, ip, "I'6", [&](VertexId w) { return isolated_in(g, w, irest); });
      split(labels, ip, "I'7", nb(g, m({"A1", "A2", "A3", "A4"})));
      split(labels, ip, "I'8", nb(g, m({"A5", "A6", "A7", "A8", "A9"})));
      leftover(labels, ip, "I'");

      const Mask a16 = m({"A1", "A2", "A3", "A4", "A5", "A6"});
      for (const char* cell : {"I'4", "I'5", "I'6"}) {
        auto rest = members_copy(labels, cell);
        split(labels, rest, std::string(cell) + "1", nb(g, a16));
        split(labels, rest, std::string(cell) + "2", all);
      }
      const Mask i7 = m({"I'7"}), i8 = m({"I'8"});
      auto r7 = members_copy(labels, "I'7");
      auto r8 = members_copy(labels, "I'8");
      split(labels, r7, "I'71", nb(g, i8));
      split_isolated(g, labels, r7, "I'72", "I'73");
      split(labels, r8, "I'81", nb(g, i7));
      split_isolated(g, labels, r8, "I'82", "I'83");

      auto i623 = members_copy(labels, "I62(3)");
      split(labels, i623, "I62(31)", in_d);
      split(labels, i623, "I62(32)", nb(g, m({"I'1", "I'2", "I'3", "I'41", "I'51", "I1", "I2", "I3", "I4", "I5"})));
      split(labels, i623, "I62(33)", all);

      std::vector<VertexId> kp;
      for (VertexId w : labels.members("K'"))
        if (!labels.in(w, "K'1")) kp.push_back(w);
      const auto db = distance_to_set(g, m({"B"}));
      const Mask i_low = minus(m({"I"}), m({"I62(3)"}));
      const Mask i_mid = m({"I62(31)", "I62(32)"});
      const Mask i_top = m({"I62(33)"});
      split(labels, kp, "K'2", [&](VertexId w) { return db[static_cast<std::size_t>(w)] == 3; });
      split(labels, kp, "K'3", nb(g, m({"K'1", "K'2"})));
      split(labels, kp, "K'4", nb(g, m({"K"})));
      split(labels, kp, "K'5", [&](VertexId w) { return has_neighbor_in(g, w, i_low) && has_neighbor_in(g, w, i_top); });
      split(labels, kp, "K'6", [&](VertexId w) { return has_neighbor_in(g, w, i_mid) && has_neighbor_in(g, w, i_top); });
      const Mask krest = to_mask(n, kp);
      split(labels, kp, "K'7", [&](VertexId w) { return isolated_in(g, w, krest); });
      split(labels, kp, "K'8", nb(g, i_low));
      split(labels, kp, "K'9", nb(g, i_mid));
      split(labels, kp, "K'10", nb(g, i_top));
      leftover(labels, kp, "K'");

      auto k2 = members_copy(labels, "K'2");
      split(labels, k2, "K'21", nb(g, m({"K'3"})));
      split_isolated(g, labels, k2, "K'22", "K'23");
      const Mask k8m = m({"K'8"}), k9m = m({"K'9"});
      auto k8 = members_copy(labels, "K'8");
      auto k9 = members_copy(labels, "K'9");
      split(labels, k8, "K'81", nb(g, k9m));
      split_isolated(g, labels, k8, "K'82", "K'83");
      split(labels, k9, "K'91", nb(g, k8m));
      split_isolated(g, labels, k9, "K'92", "K'93");

      // I*: members of I on some shortest (w', B)-path with w' in K'2.
      Mask istar(static_cast<std::size_t>(n), 0);
      const Mask imask = m({"I"});
      for (VertexId src : labels.members("K'2")) {
        const auto from = bfs_distances(g, src);
        const int total = db[static_cast<std::size_t>(src)];
        for (VertexId w = 0; w < n; ++w) {
          const auto i = static_cast<std::size_t>(w);
          if (imask[i] && from[i] != kInfinity && db[i] != kInfinity && from[i] + db[i] == total) istar[i] = 1;
        }
      }
      labels.istar = from_mask(istar);
      break;
    }
  }
}

// ---------------------------------------------------------------- assembly

Partition build_partition(const MultiGraph& g) {
  Partition p;
  p.base = select_base_edge(g);
  p.layers = layer_partition(g, p.base);
  p.labels = coarse_refine(g, p.layers);
  if (p.labels.members("K'").size() < p.labels.members("L'").size()) {
    std::swap(p.base.u, p.base.v);
    p.swapped = true;
    p.layers = layer_partition(g, p.base);
    p.labels = coarse_refine(g, p.layers);
  }
  static_refine(g, p.layers, p.labels);
  return p;
}

std::string dump_labels(const FineLabels& labels) {
  std::ostringstream out;
  for (VertexId w = 0; w < labels.vertex_count(); ++w) out << w << '\t' << labels.joined(w) << '\n';
  return out.str();
}

}  // namespace orient4

#include "orient4/pipeline.hpp"

#include <map>
#include <sstream>

namespace orient4 {

const std::vector<ScheduleStep>& stage_schedule() {
  static const std::vector<ScheduleStep> kSchedule = {
      {StageId::Cons1, {}},   {StageId::Cons4, {}},   {StageId::Cons5, {}},   {{}, Checkpoint::D1},
      {StageId::Cons6, {}},   {StageId::Cons2, {}},   {{}, Checkpoint::D2},   {StageId::Cons3, {}},
      {StageId::Cons8_2, {}}, {StageId::Cons8_1, {}}, {StageId::Cons8, {}},   {{}, Checkpoint::D3},
      {StageId::Cons8_5, {}}, {{}, Checkpoint::D4},   {StageId::Cons10, {}},  {StageId::Cons12, {}},
      {StageId::Cons11, {}},
  };
  return kSchedule;
}

// ------------------------------------------------------------ bound table

namespace {

// a*g + b
struct Lin {
  int a, b;
  int at(int g) const { return a * g + b; }
};

struct Row {
  Lin to_u, from_v;
};

constexpr Lin c(int b) { return {0, b}; }
constexpr Lin gp(int b) { return {1, b}; }
constexpr Lin g2(int b) { return {2, b}; }

const std::map<std::string, Row>& bound_table() {
  static const std::map<std::string, Row> kTable = [] {
    std::map<std::string, Row> t;
    auto put = [&t](std::initializer_list<const char*> cells, Lin to_u, Lin from_v) {
      for (const char* cell : cells) t[cell] = {to_u, from_v};
    };
    // base edge and S22
    put({"u"}, c(0), gp(-1));
    put({"v"}, gp(-1), c(0));
    put({"S22"}, c(2), c(2));
    // A and A'
    put({"A1"}, c(1), c(2));
    put({"A2", "A3"}, c(1), c(3));
    put({"A4"}, c(1), c(4));
    put({"A5", "A6"}, c(1), c(5));
    put({"A7", "A91"}, c(1), c(6));
    put({"A8", "A92"}, c(1), c(7));
    put({"A93"}, c(1), gp(3));
    put({"A94"}, gp(-1), g2(-2));
    put({"A95"}, c(2), gp(1));
    put({"A'1", "A'2", "A'3"}, c(2), gp(1));
    // B and B'
    put({"B1"}, c(2), c(1));
    put({"B2", "B3"}, c(3), c(1));
    put({"B4"}, c(4), c(1));
    put({"B5", "B6"}, c(5), c(1));
    put({"B7"}, c(6), c(1));
    put({"B8"}, c(9), c(1));
    put({"B9"}, c(8), c(1));
    put({"B10(1)"}, g2(-2), gp(-1));
    put({"B10(2)"}, gp(1), c(2));
    put({"B'1", "B'2", "B'3"}, gp(1), c(2));
    // I
    put({"I1"}, c(2), c(3));
    put({"I2", "I3"}, c(2), c(4));
    put({"I4"}, c(2), c(5));
    put({"I5"}, c(2), c(6));
    put({"I61(1)"}, c(3), c(4));
    put({"I61(21)"}, gp(0), c(4));
    put({"I61(22)"}, c(2), gp(2));
    put({"I61(3)"}, c(3), c(5));
    put({"I62(1)"}, c(2), c(5));
    put({"I62(2)"}, c(2), gp(2));
    put({"I62(31)"}, gp(-2), g2(-3));
    put({"I62(32)"}, gp(0), gp(3));
    put({"I62(33)"}, gp(0), c(9));
    // J
    put({"J1"}, c(3), c(2));
    put({"J2", "J3"}, c(4), c(2));
    put({"J4"}, c(5), c(2));
    put({"J5"}, c(8), c(2));
    put({"J6"}, c(7), c(2));
    // K, L, M
    put({"K1"}, c(3), c(4));
    put({"K2", "K3"}, c(3), c(5));
    put({"L1"}, c(4), c(3));
    put({"L2"}, c(5), c(3));
    put({"L3"}, c(4), c(4));
    put({"L4"}, c(7), c(3));
    put({"M1"}, c(4), c(4));
    put({"M2"}, c(6), c(5));
    put({"M31", "M'1"}, gp(0), gp(0));
    put({"M32"}, gp(2), c(7));
    put({"M'21", "M'22", "M'23"}, gp(3), c(8));
    // S33
    put({"X(i)"}, c(3), c(3));
    put({"X(ii)", "X'1"}, c(5), c(3));
    put({"X(iii)"}, c(3), c(5));
    put({"X'2", "X'3"}, c(3), c(6));
    put({"X'4"}, gp(1), gp(1));
    put({"X'5"}, c(4), c(4));
    // L'
    put({"L'11", "L'12", "L'13", "L'2", "L'3", "L'41", "L'42", "L'43", "L'51", "L'52", "L'53"}, c(6), c(4));
    put({"L'54"}, c(7), c(4));
    // J'
    put({"J'1"}, g2(-3), gp(-2));
    put({"J'2"}, c(5), gp(0));
    put({"J'31"}, c(6), c(3));
    put({"J'32"}, c(9), gp(0));
    put({"J'41"}, c(6), gp(1));
    put({"J'42"}, c(10), gp(0));
    put({"J'51", "J'52", "J'53"}, c(7), gp(1));
    put({"J'61", "J'62", "J'63"}, c(11), gp(1));
    // I'
    put({"I'1"}, c(2), c(5));
    put({"I'2"}, c(2), c(6));
    put({"I'3"}, gp(-2), g2(-3));
    put({"I'41", "I'51", "I'71", "I'72", "I'73"}, gp(1), c(6));
    put({"I'42"}, gp(0), gp(3));
    put({"I'52"}, gp(1), gp(4));
    put({"I'61"}, gp(2), c(6));
    put({"I'62"}, gp(2), gp(4));
    put({"I'81", "I'82", "I'83"}, gp(1), gp(5));
    // K'
    put({"K'1"}, gp(-1), gp(1));
    put({"K'21", "K'22", "K'23", "K'7"}, gp(2), c(8));
    put({"K'3"}, gp(1), c(8));
    put({"K'4"}, gp(1), c(6));
    put({"K'5"}, gp(1), gp(3));
    put({"K'6"}, c(5), c(8));
    put({"K'81", "K'82", "K'83"}, gp(2), gp(4));
    put({"K'91", "K'92", "K'93"}, gp(2), c(9));
    return t;
  }();
  return kTable;
}

}  // namespace

std::vector<std::string> bound_table_cells() {
  std::vector<std::string> out;
  for (const auto& [cell, row] : bound_table()) out.push_back(cell);
  return out;
}

std::optional<CellBound> bound_row(const std::string& cell, int gstar) {
  const auto& t = bound_table();
  const auto it = t.find(cell);
  if (it == t.end()) return std::nullopt;
  return CellBound{it->second.to_u.at(gstar), it->second.from_v.at(gstar)};
}

// ------------------------------------------------------------ verification

VerificationReport verify_orientation(const MixedOrientation& o) {
  VerificationReport r;
  r.directed_diameter = directed_diameter(o);
  r.strong = r.directed_diameter != kInfinity;
  return r;
}

VerificationReport verify(const MixedOrientation& o, const Partition& p) {
  VerificationReport r = verify_orientation(o);
  const int g = p.base.gstar;
  const VertexId u = p.base.u, v = p.base.v;
  r.bound = g + 13;
  r.bound_ok = r.strong && r.directed_diameter <= r.bound;
  r.to_u = directed_distances_to(o, u);
  r.from_v = directed_distances_from(o, v);
  const int n = o.graph().vertex_count();
  for (VertexId w = 0; w < n; ++w) {
    const auto i = static_cast<std::size_t>(w);
    const std::string& cell = p.labels.finest(w);
    const auto row = bound_row(cell, g);
    if (!row) {
      r.cell_violations.push_back({w, cell, "coverage", 0, 0});
      continue;
    }
    if (r.to_u[i] > row->to_u) r.cell_violations.push_back({w, cell, "to_u", r.to_u[i], row->to_u});
    if (r.from_v[i] > row->from_v) r.cell_violations.push_back({w, cell, "from_v", r.from_v[i], row->from_v});
  }
  // exact values on the base edge and S22
  auto exact = [&](VertexId w, const std::string& cell, int observed, int want) {
    if (observed != want) r.cell_violations.push_back({w, cell, "exact", observed, want});
  };
  exact(v, "v", directed_distances_from(o, u)[static_cast<std::size_t>(v)], 1);
  exact(u, "u", r.from_v[static_cast<std::size_t>(u)], g - 1);
  for (VertexId w : p.labels.members("S22")) {
    exact(w, "S22", r.to_u[static_cast<std::size_t>(w)], 2);
    exact(w, "S22", r.from_v[static_cast<std::size_t>(w)], 2);
  }
  return r;
}

// ------------------------------------------------------------ pipeline

PipelineResult orient_diameter4(const MultiGraph& g) {
  Partition p = build_partition(g);
  MixedOrientation o(g);
  for (const auto& step : stage_schedule()) {
    if (step.checkpoint) {
      staged_refine(g, p.layers, p.labels, o, *step.checkpoint);
      p.checkpoints.push_back(o);
      continue;
    }
    const std::string tag = stage_tag(*step.stage);
    try {
      apply_stage(o, p, *step.stage);
    } catch (const ConflictError& e) {
      throw ConstructionFailure(tag, "conflict", e.what());
    } catch (const NotFoundError& e) {
      throw ConstructionFailure(tag, "not-found", e.what());
    } catch (const InvalidRsError& e) {
      throw ConstructionFailure(tag, "invalid-rs", e.what());
    } catch (const PreconditionError& e) {
      throw ConstructionFailure(tag, "precondition", e.what());
    } catch (const InternalError& e) {
      throw ConstructionFailure(tag, "internal", e.what());
    }
  }
  if (o.undirected_edge_count() != 0)
    throw ConstructionFailure("cons11", "internal", std::to_string(o.undirected_edge_count()) + " edges left undirected");
  VerificationReport report = verify(o, p);
  return {std::move(o), std::move(p), std::move(report)};
}

MixedOrientation baseline_strong_orientation(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (const auto bridges = find_bridges(g); !bridges.empty())
    throw PreconditionError("graph has a bridge (edge " + std::to_string(bridges.front()) + ")");
  MixedOrientation o(g);
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    const auto inc = g.incident(x);
    auto& k = next[static_cast<std::size_t>(x)];
    if (k == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence step = inc[k++];
    if (o.is_directed(step.edge)) continue;
    // a tree arc leads down; any other edge closes toward an ancestor
    o.orient_from(step.edge, x, "baseline");
    if (!seen[static_cast<std::size_t>(step.neighbor)]) {
      seen[static_cast<std::size_t>(step.neighbor)] = 1;
      stack.push_back(step.neighbor);
    }
  }
  return o;
}

std::string stage_trace(const MixedOrientation& o) {
  std::ostringstream out;
  for (const auto& entry : o.stage_log())
    for (EdgeId e : entry.edges) out << entry.stage << '\t' << e << '\t' << o.tail(e) << '\t' << o.head(e) << '\n';
  return out.str();
}

}  // namespace orient4

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "orient4/pipeline.hpp"
#include "test_util.hpp"

using namespace orient4;

namespace {

// Coarse per-group rows of the summary tables (d(w,u), d(v,w)) as linear
// expressions a*g + b, keyed by the top-level cell of a label path.
struct Coarse {
  int ua, ub, va, vb;
};
const std::map<std::string, Coarse>& summary_rows() {
  static const std::map<std::string, Coarse> rows = {
      {"A", {1, -1, 1, 3}}, {"B", {0, 9, 1, -1}},  {"A'", {0, 2, 1, 1}},  {"B'", {1, 1, 0, 2}},
      {"I", {1, 0, 0, 9}},  {"J", {0, 8, 0, 2}},   {"I'", {1, 2, 1, 5}},  {"J'", {0, 11, 1, 1}},
      {"K", {0, 3, 0, 5}},  {"L", {0, 7, 0, 4}},   {"K'", {1, 2, 0, 9}},  {"L'", {0, 7, 0, 4}},
      {"S22", {0, 2, 0, 2}}, {"X", {1, 1, 0, 6}},  {"X'", {1, 1, 0, 6}},  {"M", {1, 2, 0, 7}},
      {"M'", {1, 3, 0, 8}},
  };
  return rows;
}

// Top-level group of a fine cell name: longest summary key that prefixes it.
std::string group_of(const std::string& cell) {
  std::string best;
  for (const auto& [key, row] : summary_rows())
    if (cell.rfind(key, 0) == 0 && key.size() > best.size()) best = key;
  return best;
}

}  // namespace

TEST(BoundTable, SpotValues) {
  const auto k1 = bound_row("K'1", 4);
  ASSERT_TRUE(k1);
  EXPECT_EQ(k1->to_u, 3);
  EXPECT_EQ(k1->from_v, 5);
  const auto ap = bound_row("A'2", 5);
  ASSERT_TRUE(ap);
  EXPECT_EQ(ap->to_u, 2);
  EXPECT_EQ(ap->from_v, 6);
  const auto u = bound_row("u", 5);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->from_v, 4);
  const auto b8 = bound_row("B8", 4);
  ASSERT_TRUE(b8);
  EXPECT_EQ(b8->to_u, 9);
  EXPECT_FALSE(bound_row("K'10", 4));
  EXPECT_FALSE(bound_row("?", 4));
  EXPECT_FALSE(bound_row("A", 4));  // only finest cells carry rows
}

// Every fine row is at most the summary row of its group, for both g*.
TEST(BoundTable, RowsWithinSummaryTables) {
  for (const std::string& cell : bound_table_cells()) {
    if (cell == "u" || cell == "v") continue;
    const std::string group = group_of(cell);
    ASSERT_FALSE(group.empty()) << cell;
    const Coarse c = summary_rows().at(group);
    for (int g : {4, 5}) {
      const CellBound row = *bound_row(cell, g);
      EXPECT_LE(row.to_u, c.ua * g + c.ub) << cell << " g*=" << g;
      EXPECT_LE(row.from_v, c.va * g + c.vb) << cell << " g*=" << g;
    }
  }
}

// Every finest cell that shows up on a random sample has a row.
TEST(BoundTable, CoversObservedCells) {
  for (int gstar : {4, 5})
    for (const CorpusEntry& entry : testkit::sample(gstar, 40, 3)) {
      const PipelineResult r = orient_diameter4(entry.graph);
      for (VertexId w = 0; w < entry.graph.vertex_count(); ++w)
        EXPECT_TRUE(bound_row(r.partition.labels.finest(w), gstar)) << r.partition.labels.finest(w);
    }
}

TEST(Pipeline, GridEndToEnd) {
  const MultiGraph g = testkit::fixture("grid2x4");
  const PipelineResult r = orient_diameter4(g);
  EXPECT_TRUE(r.report.strong);
  EXPECT_LE(r.report.directed_diameter, 17);
  EXPECT_EQ(r.report.bound, 17);
  EXPECT_TRUE(r.report.ok());
  EXPECT_EQ(r.orientation.undirected_edge_count(), 0);
}

TEST(Pipeline, Preconditions) {
  EXPECT_THROW(orient_diameter4(testkit::fixture("c9")), PreconditionError);
  EXPECT_THROW(orient_diameter4(testkit::fixture("bridged")), PreconditionError);
  EXPECT_THROW(orient_diameter4(testkit::fixture("k4")), PreconditionError);
}

TEST(Pipeline, BaseEdgeExactValues) {
  for (int gstar : {4, 5})
    for (const CorpusEntry& entry : testkit::sample(gstar, 20, 8)) {
      const PipelineResult r = orient_diameter4(entry.graph);
      const VertexId u = r.partition.base.u, v = r.partition.base.v;
      EXPECT_EQ(directed_distances_from(r.orientation, u)[static_cast<std::size_t>(v)], 1);
      EXPECT_EQ(r.report.from_v[static_cast<std::size_t>(u)], gstar - 1);
      for (VertexId w : r.partition.labels.members("S22")) {
        EXPECT_EQ(r.report.to_u[static_cast<std::size_t>(w)], 2);
        EXPECT_EQ(r.report.from_v[static_cast<std::size_t>(w)], 2);
      }
    }
}

// Reversing every arc keeps strongness and diameter but breaks d(u,v) = 1,
// which the verifier must report.
TEST(Verify, ReversedOrientationIsFlagged) {
  const MultiGraph g = testkit::fixture("grid2x4");
  const PipelineResult r = orient_diameter4(g);
  MixedOrientation rev(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    rev.set_direction(e, r.orientation.direction(e) == EdgeDirection::Forward ? EdgeDirection::Backward
                                                                             : EdgeDirection::Forward,
                      "rev");
  const VerificationReport bad = verify(rev, r.partition);
  EXPECT_TRUE(bad.strong);
  EXPECT_EQ(bad.directed_diameter, r.report.directed_diameter);
  EXPECT_FALSE(bad.ok());
  bool exact = false;
  for (const auto& v : bad.cell_violations) exact = exact || v.kind == "exact";
  EXPECT_TRUE(exact);
}

// The reported diameter is the max over all ordered pairs, computed here
// pair by pair from single-source BFS.
TEST(VerifyProperty, DiameterIsMaxOverPairs) {
  for (const CorpusEntry& entry : testkit::sample(5, 15, 21)) {
    const PipelineResult r = orient_diameter4(entry.graph);
    int worst = 0;
    for (VertexId x = 0; x < entry.graph.vertex_count(); ++x)
      for (int d : directed_distances_from(r.orientation, x)) worst = std::max(worst, d);
    EXPECT_EQ(worst, r.report.directed_diameter);
  }
}

TEST(Baseline, StrongOnFixturesAndRejectsBridges) {
  for (const char* name : {"c4", "c5", "c7", "k4", "k23", "k33", "grid2x4", "c9"}) {
    const MultiGraph g = testkit::fixture(name);
    const MixedOrientation o = baseline_strong_orientation(g);
    EXPECT_TRUE(is_strong(o)) << name;
    EXPECT_EQ(verify_orientation(o).bound, kInfinity);
  }
  EXPECT_THROW(baseline_strong_orientation(testkit::fixture("bridged")), PreconditionError);
  EXPECT_THROW(baseline_strong_orientation(MultiGraph(0)), PreconditionError);
}

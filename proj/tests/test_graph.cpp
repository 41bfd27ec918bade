#include <gtest/gtest.h>

#include "orient4/corpus.hpp"
#include "orient4/graph.hpp"
#include "test_util.hpp"

using namespace orient4;

namespace {

// Reference: an edge is a bridge iff removing it disconnects its endpoints.
std::vector<EdgeId> bridges_by_removal(const MultiGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (bfs_distances_without(g, g.edge(e).a, e)[static_cast<std::size_t>(g.edge(e).b)] == kInfinity) out.push_back(e);
  return out;
}

}  // namespace

TEST(Graph, AdjacencySortedAndParallelEdgesKept) {
  MultiGraph g(3);
  g.add_edge(0, 2);
  g.add_edge(0, 1);
  g.add_edge(2, 0);
  ASSERT_EQ(g.edge_count(), 3);
  const auto inc = g.incident(0);
  ASSERT_EQ(inc.size(), 3u);
  EXPECT_EQ(inc[0].neighbor, 1);
  EXPECT_EQ(inc[1].edge, 0);
  EXPECT_EQ(inc[2].edge, 2);
  EXPECT_EQ(g.neighbors(0), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(g.edges_between(2, 0), (std::vector<EdgeId>{0, 2}));
}

TEST(Graph, RejectsLoopsAndBadIds) {
  MultiGraph g(2);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 2), GraphError);
}

TEST(Graph, CycleMetrics) {
  for (int n = 3; n <= 9; ++n) {
    const MultiGraph c = cycle_graph(n);
    EXPECT_EQ(diameter(c), n / 2);
    EXPECT_EQ(graph_edge_girth(c), n);
    EXPECT_TRUE(find_bridges(c).empty());
  }
}

TEST(Graph, DoubledEdgeIsNotABridge) {
  MultiGraph g(2);
  g.add_edge(0, 1);
  EXPECT_EQ(find_bridges(g), (std::vector<EdgeId>{0}));
  g.add_edge(0, 1);
  EXPECT_TRUE(find_bridges(g).empty());
  EXPECT_EQ(edge_girth(g, 0), 2);
}

TEST(Graph, BridgedFixture) {
  const MultiGraph g = testkit::fixture("bridged");
  EXPECT_EQ(find_bridges(g), (std::vector<EdgeId>{8}));
  EXPECT_EQ(edge_girth(g, 8), kInfinity);
  EXPECT_EQ(graph_edge_girth(g), kInfinity);
}

TEST(Graph, DisconnectedDiameterIsInfinite) {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(diameter(g), kInfinity);
  EXPECT_EQ(diameter(MultiGraph(1)), 0);
  EXPECT_EQ(diameter(MultiGraph(0)), 0);
}

TEST(Graph, Families) {
  EXPECT_EQ(diameter(grid_graph(2, 4)), 4);
  EXPECT_EQ(graph_edge_girth(grid_graph(3, 3)), 4);
  EXPECT_EQ(complete_bipartite(3, 3).edge_count(), 9);
  EXPECT_EQ(graph_edge_girth(complete_graph(5)), 3);
  const MultiGraph t = theta_graph({2, 3, 3});
  EXPECT_EQ(t.vertex_count(), 7);
  EXPECT_EQ(graph_edge_girth(t), 5);
  const MultiGraph p = prism_chain(3);
  EXPECT_EQ(p.vertex_count(), 11);
  EXPECT_EQ(graph_edge_girth(p), 5);
}

// Property: lowpoint bridges agree with the removal definition, and edge girth
// is finite exactly on non-bridges.
TEST(GraphProperty, BridgesMatchRemovalReference) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    MultiGraph g(rng.between(2, 12));
    const int m = rng.between(1, 20);
    for (int i = 0; i < m; ++i) {
      const VertexId a = rng.between(0, g.vertex_count() - 1);
      VertexId b = rng.between(0, g.vertex_count() - 2);
      if (b >= a) ++b;
      g.add_edge(a, b);
    }
    const auto bridges = find_bridges(g);
    ASSERT_EQ(bridges, bridges_by_removal(g));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool bridge = std::find(bridges.begin(), bridges.end(), e) != bridges.end();
      EXPECT_EQ(edge_girth(g, e) == kInfinity, bridge);
    }
  }
}

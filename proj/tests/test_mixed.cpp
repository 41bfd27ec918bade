#include <gtest/gtest.h>

#include "orient4/corpus.hpp"
#include "orient4/mixed.hpp"
#include "orient4/pipeline.hpp"

using namespace orient4;

namespace {

MixedOrientation directed_cycle(const MultiGraph& g) {
  MixedOrientation o(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) o.set_direction(e, EdgeDirection::Forward, "test");
  return o;
}

}  // namespace

TEST(Mixed, DirectionsAreFinal) {
  const MultiGraph g = cycle_graph(4);
  MixedOrientation o(g);
  o.orient_from(0, 1, "a");
  EXPECT_EQ(o.direction(0), EdgeDirection::Backward);
  EXPECT_EQ(o.tail(0), 1);
  EXPECT_EQ(o.head(0), 0);
  EXPECT_NO_THROW(o.set_direction(0, EdgeDirection::Backward, "b"));  // same direction is fine
  EXPECT_THROW(o.set_direction(0, EdgeDirection::Forward, "c"), ConflictError);
  try {
    o.orient_from(0, 0, "d");
    ADD_FAILURE() << "expected ConflictError";
  } catch (const ConflictError& e) {
    EXPECT_EQ(e.edge(), 0);
  }
}

TEST(Mixed, StageLogGroupsByStage) {
  const MultiGraph g = cycle_graph(5);
  MixedOrientation o(g);
  o.orient_from(0, 0, "s1");
  o.orient_from(1, 1, "s1");
  o.orient_from(2, 2, "s2");
  ASSERT_EQ(o.stage_log().size(), 2u);
  EXPECT_EQ(o.stage_log()[0].stage, "s1");
  EXPECT_EQ(o.stage_log()[0].edges, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(o.undirected_edge_count(), 2);
  EXPECT_EQ(o.directed_vertices(), (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_FALSE(o.is_undirected_vertex(2));
  EXPECT_TRUE(o.is_undirected_vertex(4));  // edges 3 and 4 are still undirected
}

TEST(Mixed, DirectedCycleDistances) {
  const MultiGraph g = cycle_graph(6);
  const MixedOrientation o = directed_cycle(g);
  EXPECT_TRUE(is_strong(o));
  EXPECT_EQ(directed_diameter(o), 5);
  const auto from = directed_distances_from(o, 0);
  const auto to = directed_distances_to(o, 0);
  for (VertexId x = 0; x < 6; ++x) {
    EXPECT_EQ(from[static_cast<std::size_t>(x)], x);
    EXPECT_EQ(to[static_cast<std::size_t>(x)], (6 - x) % 6);
  }
  EXPECT_EQ(theta(o, 3, {0}), 3);
  EXPECT_EQ(theta(o, 1, {0, 2}), 1);
  EXPECT_EQ(theta(o, 4, {0, 2}), 2);  // to 0 takes 2, from 2 takes 2
  EXPECT_THROW(theta(o, 1, {}), EmptySetError);
}

TEST(Mixed, PartialOrientationIsNotStrong) {
  const MultiGraph g = cycle_graph(4);
  MixedOrientation o(g);
  o.orient_from(0, 0, "x");
  EXPECT_FALSE(is_strong(o));
  EXPECT_EQ(directed_diameter(o), kInfinity);
  EXPECT_EQ(directed_distances_from(o, 0)[1], 1);
  EXPECT_EQ(directed_distances_from(o, 1)[0], kInfinity);
}

TEST(Mixed, SetDistances) {
  const MultiGraph g = cycle_graph(6);
  const MixedOrientation o = directed_cycle(g);
  const auto from = directed_distances_from_set(o, {0, 3});
  EXPECT_EQ(from[2], 2);
  EXPECT_EQ(from[4], 1);
  const auto to = directed_distances_to_set(o, {0, 3});
  EXPECT_EQ(to[1], 2);
  EXPECT_EQ(to[5], 1);
}

TEST(Mixed, ArcListsFollowDirections) {
  const MultiGraph g = cycle_graph(3);
  MixedOrientation o(g);
  o.set_direction(0, EdgeDirection::Forward, "t");
  o.set_direction(2, EdgeDirection::Backward, "t");
  const ArcLists arcs = arc_lists(o);
  EXPECT_EQ(arcs.out[0], (std::vector<VertexId>{1, 2}));
  EXPECT_TRUE(arcs.out[2].empty());
  EXPECT_EQ(arcs.in[2], (std::vector<VertexId>{0}));
}

// Property: the DFS baseline is strong on bridgeless connected graphs and its
// distances are symmetric in the from/to sense (d_to(x)[y] = d_from(y)[x]).
TEST(MixedProperty, BaselineStrongAndDistanceDuality) {
  Rng rng(17);
  int tested = 0;
  while (tested < 100) {
    MultiGraph g = grow_ear_graph(rng, rng.between(3, 6), rng.between(5, 25));
    if (!find_bridges(g).empty()) continue;
    ++tested;
    const MixedOrientation o = baseline_strong_orientation(g);
    ASSERT_EQ(o.undirected_edge_count(), 0);
    ASSERT_TRUE(is_strong(o));
    const VertexId x = rng.between(0, g.vertex_count() - 1);
    const auto to = directed_distances_to(o, x);
    for (VertexId y = 0; y < g.vertex_count(); ++y)
      EXPECT_EQ(to[static_cast<std::size_t>(y)], directed_distances_from(o, y)[static_cast<std::size_t>(x)]);
  }
}

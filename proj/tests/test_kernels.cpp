#include <gtest/gtest.h>

#include "orient4/corpus.hpp"
#include "orient4/kernels.hpp"
#include "orient4/mixed.hpp"
#include "orient4/pipeline.hpp"

using namespace orient4;

TEST(Kernels, SmallCases) {
  EXPECT_EQ(kernels::directed_diameter_serial({}), 0);
  EXPECT_EQ(kernels::directed_diameter_parallel({}), 0);
  const kernels::Adjacency two{{1}, {}};
  EXPECT_EQ(kernels::directed_diameter_serial(two), kInfinity);
  EXPECT_EQ(kernels::directed_diameter_parallel(two), kInfinity);
  const kernels::Adjacency tri{{1}, {2}, {0}};
  EXPECT_EQ(kernels::directed_diameter_serial(tri), 2);
  EXPECT_EQ(kernels::directed_diameter_parallel(tri), 2);
  EXPECT_GE(kernels::max_threads(), 1);
}

// Property: parallel and serial kernels agree on random orientations, strong
// or not, and match the library-level directed_diameter.
TEST(KernelsProperty, ParallelMatchesSerial) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const MultiGraph g = grow_ear_graph(rng, rng.between(3, 5), rng.between(4, 60));
    MixedOrientation o = k % 2 ? baseline_strong_orientation(g) : MixedOrientation(g);
    if (k % 2 == 0)
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        o.set_direction(e, rng.chance(0.5) ? EdgeDirection::Forward : EdgeDirection::Backward, "rand");
    const kernels::Adjacency out = arc_lists(o).out;
    const int serial = kernels::directed_diameter_serial(out);
    ASSERT_EQ(serial, kernels::directed_diameter_parallel(out));
    ASSERT_EQ(serial, directed_diameter(o));
  }
}

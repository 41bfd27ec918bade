#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <nlohmann/json.hpp>

#include "orient4/corpus.hpp"
#include "orient4/io.hpp"
#include "test_util.hpp"

using namespace orient4;
namespace fs = std::filesystem;

TEST(Rng, FixedStream) {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  for (int k = 0; k < 1000; ++k) {
    const int x = c.between(-3, 3);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
    const double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  // mt19937_64 reference output for the default seed
  EXPECT_EQ(Rng(5489).next(), 14514284786278117030ULL);
}

TEST(Rng, EnvOverride) {
  unsetenv("ORIENT_SEED");
  EXPECT_EQ(seed_from_env(7), 7u);
  setenv("ORIENT_SEED", "123", 1);
  EXPECT_EQ(seed_from_env(7), 123u);
  setenv("ORIENT_SEED", "12x", 1);
  EXPECT_EQ(seed_from_env(7), 7u);
  unsetenv("ORIENT_SEED");
}

TEST(Generators, CandidatesAndFilter) {
  const auto cands = gen_candidates(9, 6, 12, 0.3, 50);
  ASSERT_EQ(cands.size(), 50u);
  for (const auto& g : cands) {
    EXPECT_GE(g.vertex_count(), 6);
    EXPECT_LE(g.vertex_count(), 12);
  }
  EXPECT_EQ(gen_candidates(9, 6, 12, 0.3, 50)[7], cands[7]);
  for (const ScopedGraph& s : filter_in_scope(cands)) {
    EXPECT_EQ(diameter(s.graph), 4);
    EXPECT_EQ(graph_edge_girth(s.graph), s.gstar);
  }
  const auto scoped = filter_in_scope({grid_graph(2, 4), grid_graph(3, 3), cycle_graph(9), cycle_graph(8), prism_chain(2)});
  ASSERT_EQ(scoped.size(), 3u);
  EXPECT_EQ(scoped[0].gstar, 4);
  EXPECT_EQ(scoped[2].gstar, 5);
}

TEST(Generators, PrismChainInScope) {
  // two pentagons glued along an edge: diameter 4; three: diameter 5
  const auto gs = in_scope_gstar(prism_chain(2));
  ASSERT_TRUE(gs);
  EXPECT_EQ(*gs, 5);
  EXPECT_FALSE(in_scope_gstar(prism_chain(3)));
}

// Property: ear growth never exceeds diameter 4 or its vertex target, and
// every edge girth stays at most g*.
TEST(GeneratorsProperty, EarGrowthInvariants) {
  Rng rng(77);
  for (int k = 0; k < 100; ++k) {
    const int gstar = rng.between(4, 5);
    const int target = rng.between(5, 60);
    const MultiGraph g = grow_ear_graph(rng, gstar, target);
    EXPECT_LE(diameter(g), 4);
    EXPECT_LE(g.vertex_count(), std::max(target, gstar));
    EXPECT_TRUE(find_bridges(g).empty());
    EXPECT_LE(graph_edge_girth(g), gstar);
  }
}

TEST(Generators, CorpusIsDeterministic) {
  const auto a = generate_corpus(5, 5, 8, 30);
  const auto b = generate_corpus(5, 5, 8, 30);
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].graph == b[i].graph);
    EXPECT_EQ(a[i].attempt, b[i].attempt);
    EXPECT_TRUE(corpus_attempt(5, 5, a[i].attempt, 30) == a[i].graph);
  }
}

// The shipped corpus: quotas, scope, vertex cap, and golden regeneration of
// every file from the seed and attempt recorded in its manifest.
TEST(ShippedCorpus, QuotasScopeAndGolden) {
  std::map<int, int> per_gstar;
  for (const char* dir : {"g4", "g5", "small_g4", "small_g5"}) {
    const fs::path root = testkit::source_path(std::string("corpus/") + dir);
    const auto manifest = nlohmann::json::parse(read_text_file((root / "manifest.json").string()));
    const auto seed = manifest["seed"].get<std::uint64_t>();
    const int gstar = manifest["gstar"].get<int>();
    const int n_max = manifest["n_max"].get<int>();
    for (const auto& f : manifest["files"]) {
      const MultiGraph g = read_graph_file((root / f["file"].get<std::string>()).string());
      const auto gs = in_scope_gstar(g);
      ASSERT_TRUE(gs) << f["file"];
      EXPECT_EQ(*gs, gstar);
      EXPECT_LE(g.vertex_count(), 150);
      EXPECT_TRUE(corpus_attempt(seed, gstar, f["attempt"].get<std::uint64_t>(), n_max) == g) << f["file"];
      ++per_gstar[gstar];
    }
  }
  EXPECT_GE(per_gstar[4], 100);
  EXPECT_GE(per_gstar[5], 100);
  EXPECT_EQ(static_cast<std::size_t>(per_gstar[4] + per_gstar[5]), testkit::corpus_files().size());
}

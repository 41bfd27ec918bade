#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "orient4/io.hpp"
#include "test_util.hpp"

using namespace orient4;

namespace {

MultiGraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace

TEST(GraphFormat, ParsesCommentsAndBlankLines) {
  const MultiGraph g = parse("# header\n\n3 3  # n m\n0 1\n1 2 # edge\n2 0\n# trailing comment\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edge(1).a, 1);
  EXPECT_EQ(g.edge(1).b, 2);
}

TEST(GraphFormat, Errors) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("3\n"), ParseError);
  EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);         // missing edge
  EXPECT_THROW(parse("3 1\n0 3\n"), ParseError);         // out of range
  EXPECT_THROW(parse("3 1\n1 1\n"), ParseError);         // loop
  EXPECT_THROW(parse("3 1\n0 1\n1 2\n"), ParseError);    // trailing edge
  EXPECT_THROW(parse("3 1\n0 1 2\n"), ParseError);       // extra token
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

// Property: parse(format(g)) == g, keeping edge order and endpoint order.
TEST(GraphFormatProperty, RoundTrip) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const MultiGraph g = grow_ear_graph(rng, rng.between(3, 5), rng.between(3, 40));
    const MultiGraph back = parse(format_graph(g, "round trip"));
    ASSERT_TRUE(back == g);
  }
}

TEST(OrientationFormat, RoundTripAndMismatch) {
  const MultiGraph g = testkit::fixture("c4");
  MixedOrientation o(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    o.set_direction(e, e % 2 ? EdgeDirection::Backward : EdgeDirection::Forward, "t");
  const std::string text = format_orientation(o);
  EXPECT_EQ(text, "0 1 >\n1 2 <\n2 3 >\n3 0 <\n");
  std::istringstream in(text);
  EXPECT_EQ(parse_orientation(g, in).directions(), o.directions());
  std::istringstream short_in("0 1 >\n1 2 <\n2 3 >\n");
  EXPECT_THROW(parse_orientation(g, short_in), ParseError);
  std::istringstream long_in(text + "3 0 <\n");
  EXPECT_THROW(parse_orientation(g, long_in), ParseError);
  std::istringstream swapped("1 0 >\n1 2 <\n2 3 >\n3 0 <\n");
  EXPECT_THROW(parse_orientation(g, swapped), ParseError);
  std::istringstream bad_dir("0 1 =\n1 2 <\n2 3 >\n3 0 <\n");
  EXPECT_THROW(parse_orientation(g, bad_dir), ParseError);
  EXPECT_THROW(format_orientation(MixedOrientation(g)), std::logic_error);
}

TEST(Report, JsonSchema) {
  const MultiGraph g = testkit::fixture("grid2x4");
  const PipelineResult r = orient_diameter4(g);
  const auto j = nlohmann::json::parse(report_json(g, r.orientation, r.report, &r.partition));
  for (const char* key : {"n", "m", "gstar", "base_edge", "strong", "directed_diameter", "bound", "bound_ok",
                          "cell_violations", "stage_log_summary"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["gstar"], 4);
  EXPECT_TRUE(j["base_edge"].contains("e"));
  EXPECT_TRUE(j["cell_violations"].is_array());
  EXPECT_FALSE(j.contains("no_bound"));
  const auto fb = nlohmann::json::parse(
      report_json(g, baseline_strong_orientation(g), verify_orientation(baseline_strong_orientation(g)), nullptr, "x"));
  EXPECT_TRUE(fb["no_bound"].get<bool>());
  EXPECT_TRUE(fb["bound"].is_null());
  EXPECT_TRUE(fb["gstar"].is_null());
}

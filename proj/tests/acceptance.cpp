// Acceptance run over the shipped corpus. Prints one PASS/FAIL line per
// criterion and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orient4/corpus.hpp"
#include "orient4/io.hpp"
#include "orient4/oracle.hpp"
#include "orient4/pipeline.hpp"
#include "test_util.hpp"

using namespace orient4;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 10) failures.push_back(why);
  }
};

struct Run {
  std::string file;
  MultiGraph graph;
  int gstar = 0;
  bool ok = false;  // pipeline returned
  std::string orientation_text;
  std::string json_text;
};

int report(int index, const Criterion& c) {
  std::printf("criterion %d: %s - %s\n", index, c.pass ? "PASS" : "FAIL", c.detail.c_str());
  for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  return c.pass ? 0 : 1;
}

}  // namespace

int main() {
  Criterion c1, c2, c3, c4, c5, c6, c7;
  std::vector<Run> runs;
  std::map<int, int> count, max_diameter;
  double slowest = 0;
  int conflicts = 0, failures = 0, violations = 0, partition_issues = 0;

  // ---- criteria 1, 2, 5, 6: one pipeline run per corpus graph
  for (const std::string& file : testkit::corpus_files()) {
    Run run{file, read_graph_file(file), 0, false, {}, {}};
    const auto gs = in_scope_gstar(run.graph);
    if (!gs) {
      c1.fail(file + ": not in scope");
      continue;
    }
    run.gstar = *gs;
    ++count[run.gstar];
    const auto start = Clock::now();
    try {
      const PipelineResult r = orient_diameter4(run.graph);
      const double secs = seconds_since(start);
      slowest = std::max(slowest, secs);
      run.ok = true;
      run.orientation_text = format_orientation(r.orientation);
      run.json_text = report_json(run.graph, r.orientation, r.report, &r.partition);
      max_diameter[run.gstar] = std::max(max_diameter[run.gstar], r.report.directed_diameter);
      if (!r.report.strong || !r.report.bound_ok)
        c1.fail(file + ": diameter " + format_distance(r.report.directed_diameter) + " > " + std::to_string(r.report.bound));
      if (secs >= 2.0) c1.fail(file + ": took " + std::to_string(secs) + " s");
      for (const auto& v : r.report.cell_violations) {
        ++violations;
        c2.fail(file + ": vertex " + std::to_string(v.vertex) + " cell " + v.cell + " " + v.kind + " observed " +
                format_distance(v.observed) + " allowed " + std::to_string(v.allowed));
      }
      const auto issues = check_partition(run.graph, r.partition, true);
      partition_issues += static_cast<int>(issues.size());
      for (const auto& issue : issues) c5.fail(file + ": " + issue);
      if (!r.partition.labels.empty("K'10")) c5.fail(file + ": K'10 is not empty");
      if (run.gstar == 5 && !(r.partition.labels.empty("K'6") && r.partition.labels.empty("K'9")))
        c5.fail(file + ": K'6 or K'9 non-empty with g*=5");
      if (r.orientation.undirected_edge_count() != 0) c6.fail(file + ": undirected edges remain");
    } catch (const ConstructionFailure& e) {
      ++failures;
      if (e.kind() == "conflict") {
        ++conflicts;
        c6.fail(file + ": " + e.what());
      }
      c1.fail(file + ": " + e.what());
      c2.fail(file + ": no orientation to check");
      c5.fail(file + ": no staged labels to check");
    } catch (const std::exception& e) {
      ++failures;
      c1.fail(file + ": " + e.what());
    }
    runs.push_back(std::move(run));
  }
  for (int gs : {4, 5})
    if (count[gs] < 100) c1.fail("only " + std::to_string(count[gs]) + " graphs with g*=" + std::to_string(gs));
  c1.detail = std::to_string(count[4]) + " graphs g*=4 (max diameter " + std::to_string(max_diameter[4]) +
              ", bound 17), " + std::to_string(count[5]) + " graphs g*=5 (max diameter " +
              std::to_string(max_diameter[5]) + ", bound 18), slowest " + std::to_string(slowest) + " s, " +
              std::to_string(failures) + " failures";
  c2.detail = std::to_string(violations) + " cell-bound or exact-value violations";
  c5.detail = std::to_string(partition_issues) + " predicate/structure issues";
  c6.detail = std::to_string(conflicts) + " conflicts";

  // ---- criterion 3: oracle cross-check
  {
    OracleOptions opt;
    opt.max_edges = 18;
    int checked = 0;
    double slowest_oracle = 0;
    auto timed = [&](const MultiGraph& g) {
      const auto start = Clock::now();
      const OracleResult r = min_oriented_diameter(g, opt);
      const double secs = seconds_since(start);
      slowest_oracle = std::max(slowest_oracle, secs);
      if (secs >= 60.0) c3.fail("oracle run took " + std::to_string(secs) + " s");
      return r.min_diameter;
    };
    for (const Run& run : runs) {
      if (!run.ok || run.graph.edge_count() > 18) continue;
      ++checked;
      const int best = timed(run.graph);
      const PipelineResult r = orient_diameter4(run.graph);
      try {
        if (!spot_check_bound(run.graph, best, r.report.directed_diameter))
          c3.fail(run.file + ": oracle " + format_distance(best) + " > pipeline " +
                  format_distance(r.report.directed_diameter));
      } catch (const std::logic_error& e) {
        c3.fail(run.file + ": " + e.what());
      }
    }
    const std::map<std::string, int> exact = {{"c4", 3}, {"c5", 4}, {"c7", 6}, {"k4", 3}, {"k23", 4}, {"grid2x4", 5}};
    for (const auto& [name, want] : exact) {
      const MultiGraph g = testkit::fixture(name);
      const int got = timed(g);
      ++checked;
      if (got != want) c3.fail(name + ": oracle " + format_distance(got) + ", expected " + std::to_string(want));
      if (got < diameter(g)) c3.fail(name + ": oracle below d(G)");
    }
    const int k33 = timed(testkit::fixture("k33"));
    if (k33 > 4) c3.fail("K3,3 oracle " + format_distance(k33) + " > 4");
    if (timed(testkit::fixture("k23")) > 4) c3.fail("K2,3 oracle > 4");
    const MultiGraph grid = testkit::fixture("grid2x4");
    const int grid_pipeline = orient_diameter4(grid).report.directed_diameter;
    if (!spot_check_bound(grid, timed(grid), grid_pipeline)) c3.fail("grid2x4: oracle above pipeline");
    c3.detail = std::to_string(checked) + " graphs cross-checked (corpus m <= 18 plus fixtures), slowest oracle " +
                std::to_string(slowest_oracle) + " s";
  }

  // ---- criterion 4: random R-S instances
  {
    Rng rng(seed_from_env(2024));
    int instances = 0;
    for (; instances < 1000; ++instances) {
      const testkit::RsCase c = testkit::random_rs_case(rng);
      MixedOrientation o(c.graph);
      try {
        rs_orient(o, c.r_set, c.s_set, "rs");
      } catch (const std::exception& e) {
        c4.fail("instance " + std::to_string(instances) + ": " + e.what());
        continue;
      }
      for (VertexId w : c.s_set)
        if (theta(o, w, c.r_set) > 2) c4.fail("instance " + std::to_string(instances) + ": theta > 2 at " + std::to_string(w));
    }
    c4.detail = std::to_string(instances) + " instances";
  }

  // ---- criterion 7: a second full pass (different thread count) and the
  // generator must reproduce byte-identical output
  {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
    int compared = 0;
    for (const Run& run : runs) {
      if (!run.ok) continue;
      const PipelineResult r = orient_diameter4(run.graph);
      ++compared;
      if (format_orientation(r.orientation) != run.orientation_text) c7.fail(run.file + ": orientation differs");
      if (report_json(run.graph, r.orientation, r.report, &r.partition) != run.json_text) c7.fail(run.file + ": JSON differs");
    }
    const auto a = generate_corpus(20240, 5, 10), b = generate_corpus(20240, 5, 10);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (format_graph(a[i].graph) != format_graph(b[i].graph)) c7.fail("generator output differs at " + std::to_string(i));
    c7.detail = std::to_string(compared) + " orientation/JSON pairs and 10 generated graphs compared";
  }

  int failed = 0;
  failed += report(1, c1);
  failed += report(2, c2);
  failed += report(3, c3);
  failed += report(4, c4);
  failed += report(5, c5);
  failed += report(6, c6);
  failed += report(7, c7);
  return failed == 0 ? 0 : 1;
}

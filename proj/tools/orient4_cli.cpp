// orient4: command-line front end.
//
//   orient <graph> [--out F] [--json F] [--trace F] [--fallback-baseline]
//   verify <graph> <orientation> [--json F]
//   oracle <graph> [--max-edges N]
//   gen --gstar G --count N --out-dir D [--seed S] [--n-max N]   (also writes manifest.json)
//   report <corpus-dir>
//   labels <graph>
//
// Exit codes: 0 ok, 1 parse/usage error, 2 precondition, 3 construction
// failure, 4 orientation not strong, 5 orientation produced but a bound or
// cell check failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orient4/corpus.hpp"
#include "orient4/io.hpp"
#include "orient4/oracle.hpp"
#include "orient4/pipeline.hpp"

namespace fs = std::filesystem;
using namespace orient4;

namespace {

enum Exit { kOk = 0, kParse = 1, kPrecondition = 2, kConstruction = 3, kNotStrong = 4, kUnverified = 5 };

// "-" or empty means stdout
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

int cmd_orient(const std::string& input, const std::string& out, const std::string& json, const std::string& trace,
               bool fallback) {
  const MultiGraph g = read_graph_file(input);
  auto run_fallback = [&](int code, const std::string& reason) {
    if (!fallback) return code;
    MixedOrientation o = baseline_strong_orientation(g);
    emit(out, format_orientation(o));
    if (!json.empty()) emit(json, report_json(g, o, verify_orientation(o), nullptr, reason));
    if (!trace.empty()) emit(trace, stage_trace(o));
    std::cerr << "no-bound: baseline orientation written\n";
    return code;
  };
  try {
    const PipelineResult r = orient_diameter4(g);
    emit(out, format_orientation(r.orientation));
    if (!json.empty()) emit(json, report_json(g, r.orientation, r.report, &r.partition));
    if (!trace.empty()) emit(trace, stage_trace(r.orientation));
    std::cerr << "g*=" << r.partition.base.gstar << " diameter=" << format_distance(r.report.directed_diameter)
              << " bound=" << r.report.bound << " cell_violations=" << r.report.cell_violations.size() << '\n';
    return r.report.ok() ? kOk : kUnverified;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    try {
      return run_fallback(kPrecondition, e.what());
    } catch (const PreconditionError& again) {
      std::cerr << "no fallback: " << again.what() << '\n';
      return kPrecondition;
    }
  } catch (const ConstructionFailure& e) {
    std::cerr << "construction failure: " << e.what() << '\n';
    return run_fallback(kConstruction, e.what());
  }
}

int cmd_verify(const std::string& graph_path, const std::string& orientation_path, const std::string& json) {
  const MultiGraph g = read_graph_file(graph_path);
  const MixedOrientation o = read_orientation_file(g, orientation_path);
  const VerificationReport r = verify_orientation(o);
  emit(json, report_json(g, o, r, nullptr));
  return r.strong ? kOk : kNotStrong;
}

int cmd_oracle(const std::string& input, int max_edges) {
  const MultiGraph g = read_graph_file(input);
  OracleOptions opt;
  opt.max_edges = max_edges;
  try {
    const OracleResult r = min_oriented_diameter(g, opt);
    std::cout << format_distance(r.min_diameter) << '\n';
    return kOk;
  } catch (const TooLargeError& e) {
    std::cerr << e.what() << '\n';
    return kPrecondition;
  }
}

int cmd_gen(std::uint64_t seed, int count, int gstar, const std::string& out_dir, int n_max) {
  if (gstar != 4 && gstar != 5) {
    std::cerr << "--gstar must be 4 or 5\n";
    return kParse;
  }
  seed = seed_from_env(seed);
  fs::create_directories(out_dir);
  const auto entries = generate_corpus(seed, gstar, count, n_max);
  nlohmann::ordered_json manifest;
  manifest["seed"] = seed;
  manifest["gstar"] = gstar;
  manifest["n_max"] = n_max;
  manifest["files"] = nlohmann::ordered_json::array();
  int index = 0;
  for (const CorpusEntry& e : entries) {
    char name[32];
    std::snprintf(name, sizeof name, "g%d_%03d.txt", gstar, index);
    std::ostringstream header;
    header << "seed " << seed << " attempt " << e.attempt << " index " << index << " gstar " << gstar;
    write_text_file((fs::path(out_dir) / name).string(), format_graph(e.graph, header.str()));
    manifest["files"].push_back(
        {{"file", name}, {"attempt", e.attempt}, {"n", e.graph.vertex_count()}, {"m", e.graph.edge_count()}});
    ++index;
  }
  write_text_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cerr << "wrote " << entries.size() << " graphs to " << out_dir << '\n';
  return kOk;
}

struct Tally {
  int graphs = 0;
  int pass = 0;
  int failures = 0;
  int max_diameter = 0;
  std::size_t cell_violations = 0;
  double max_seconds = 0;
};

int cmd_report(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::map<int, Tally> by_gstar;
  bool all_ok = true;
  for (const fs::path& f : files) {
    const MultiGraph g = read_graph_file(f.string());
    const auto gs = in_scope_gstar(g);
    if (!gs) {
      std::cerr << f.string() << ": out of scope, skipped\n";
      continue;
    }
    Tally& t = by_gstar[*gs];
    ++t.graphs;
    const auto start = std::chrono::steady_clock::now();
    try {
      const PipelineResult r = orient_diameter4(g);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      t.max_seconds = std::max(t.max_seconds, secs);
      t.max_diameter = std::max(t.max_diameter, r.report.directed_diameter);
      t.cell_violations += r.report.cell_violations.size();
      if (r.report.ok())
        ++t.pass;
      else
        std::cerr << f.string() << ": diameter " << format_distance(r.report.directed_diameter) << ", "
                  << r.report.cell_violations.size() << " cell violations\n";
    } catch (const std::exception& e) {
      ++t.failures;
      std::cerr << f.string() << ": " << e.what() << '\n';
    }
    all_ok = all_ok && t.pass + t.failures == t.graphs && t.failures == 0;
  }
  std::printf("%-6s %7s %6s %9s %9s %6s %10s %8s\n", "gstar", "graphs", "pass", "failures", "cell_viol", "bound",
              "max_diam", "max_s");
  for (const auto& [gs, t] : by_gstar) {
    std::printf("%-6d %7d %6d %9d %9zu %6d %10d %8.3f\n", gs, t.graphs, t.pass, t.failures, t.cell_violations,
                gs + 13, t.max_diameter, t.max_seconds);
    all_ok = all_ok && t.pass == t.graphs;
  }
  return all_ok ? kOk : kUnverified;
}

int cmd_labels(const std::string& input) {
  const MultiGraph g = read_graph_file(input);
  try {
    const PipelineResult r = orient_diameter4(g);
    std::cout << dump_labels(r.partition.labels);
    return kOk;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConstructionFailure& e) {
    // labels up to the static level are still meaningful
    std::cerr << "construction failure: " << e.what() << '\n';
    std::cout << dump_labels(build_partition(g).labels);
    return kConstruction;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong orientations of diameter-4 graphs"};
  app.require_subcommand(1);

  std::string input, orientation, out, json, trace, out_dir, corpus_dir;
  bool fallback = false;
  int max_edges = 20, count = 100, gstar = 4, n_max = 150;
  std::uint64_t seed = 1;

  auto* orient = app.add_subcommand("orient", "Orient an in-scope graph");
  orient->add_option("graph", input, "Graph file")->required();
  orient->add_option("--out", out, "Orientation file (default stdout)");
  orient->add_option("--json", json, "JSON report file");
  orient->add_option("--trace", trace, "Per-edge stage trace file");
  orient->add_flag("--fallback-baseline", fallback, "On failure, write a DFS orientation without a bound");

  auto* verify_cmd = app.add_subcommand("verify", "Check strongness and diameter of an orientation");
  verify_cmd->add_option("graph", input, "Graph file")->required();
  verify_cmd->add_option("orientation", orientation, "Orientation file")->required();
  verify_cmd->add_option("--json", json, "JSON report file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum oriented diameter");
  oracle->add_option("graph", input, "Graph file")->required();
  oracle->add_option("--max-edges", max_edges, "Refuse graphs with more edges");

  auto* gen = app.add_subcommand("gen", "Generate in-scope graphs");
  gen->add_option("--seed", seed, "Generator seed (ORIENT_SEED overrides)");
  gen->add_option("--count", count, "Number of graphs");
  gen->add_option("--gstar", gstar, "Target g* (4 or 5)");
  gen->add_option("--out-dir", out_dir, "Output directory")->required();
  gen->add_option("--n-max", n_max, "Vertex cap");

  auto* report = app.add_subcommand("report", "Bound-check every graph under a directory");
  report->add_option("corpus-dir", corpus_dir, "Directory of graph files")->required();

  auto* labels = app.add_subcommand("labels", "Print the cell label path of every vertex");
  labels->add_option("graph", input, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*orient) return cmd_orient(input, out, json, trace, fallback);
    if (*verify_cmd) return cmd_verify(input, orientation, json);
    if (*oracle) return cmd_oracle(input, max_edges);
    if (*gen) return cmd_gen(seed, count, gstar, out_dir, n_max);
    if (*report) return cmd_report(corpus_dir);
    if (*labels) return cmd_labels(input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}

#include "orient4/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace orient4 {

namespace {

// Next non-empty, non-comment line with the comment stripped.
bool next_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void bad(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

nlohmann::json distance_json(int d) { return d == kInfinity ? nlohmann::json(nullptr) : nlohmann::json(d); }

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError("missing header line \"n m\"");
  long long n = -1, m = -1;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0) bad(line_no, "expected \"n m\"");
  }
  MultiGraph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    if (!next_line(in, line, line_no)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    std::istringstream row(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) bad(line_no, "expected \"a b\"");
    if (a < 0 || b < 0 || a >= n || b >= n) bad(line_no, "vertex id out of range");
    if (a == b) bad(line_no, "loops are not allowed");
    g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (next_line(in, line, line_no)) bad(line_no, "trailing content after the edge list");
  return g;
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_graph(const MultiGraph& g, const std::string& header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

std::string format_orientation(const MixedOrientation& o) {
  std::ostringstream out;
  const MultiGraph& g = o.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const EdgeDirection d = o.direction(e);
    if (d == EdgeDirection::Undirected) throw std::logic_error("edge " + std::to_string(e) + " is undirected");
    out << ed.a << ' ' << ed.b << ' ' << (d == EdgeDirection::Forward ? '>' : '<') << '\n';
  }
  return out.str();
}

MixedOrientation parse_orientation(const MultiGraph& g, std::istream& in) {
  MixedOrientation o(g);
  std::string line;
  int line_no = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!next_line(in, line, line_no))
      throw ParseError("orientation has " + std::to_string(e) + " lines, graph has " + std::to_string(g.edge_count()) + " edges");
    std::istringstream row(line);
    long long a = -1, b = -1;
    std::string dir, extra;
    if (!(row >> a >> b >> dir) || (row >> extra) || (dir != ">" && dir != "<")) bad(line_no, "expected \"a b >\" or \"a b <\"");
    const Edge& ed = g.edge(e);
    if (a != ed.a || b != ed.b) bad(line_no, "endpoints do not match edge " + std::to_string(e));
    o.set_direction(e, dir == ">" ? EdgeDirection::Forward : EdgeDirection::Backward, "input");
  }
  if (next_line(in, line, line_no)) bad(line_no, "more orientation lines than edges");
  return o;
}

MixedOrientation read_orientation_file(const MultiGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return parse_orientation(g, in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string report_json(const MultiGraph& g, const MixedOrientation& o, const VerificationReport& r,
                        const Partition* partition, const std::string& no_bound_reason) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  if (partition) {
    j["gstar"] = partition->base.gstar;
    j["base_edge"] = {{"u", partition->base.u}, {"v", partition->base.v}, {"e", partition->base.e}};
  } else {
    j["gstar"] = nullptr;
    j["base_edge"] = nullptr;
  }
  j["strong"] = r.strong;
  j["directed_diameter"] = distance_json(r.directed_diameter);
  j["bound"] = distance_json(r.bound);
  j["bound_ok"] = r.bound_ok;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : r.cell_violations)
    violations.push_back({{"vertex", v.vertex},
                          {"cell", v.cell},
                          {"kind", v.kind},
                          {"observed", distance_json(v.observed)},
                          {"allowed", v.allowed}});
  j["cell_violations"] = violations;
  auto summary = nlohmann::ordered_json::array();
  for (const auto& entry : o.stage_log()) summary.push_back({{"stage", entry.stage}, {"edges", entry.edges.size()}});
  j["stage_log_summary"] = summary;
  if (!no_bound_reason.empty()) {
    j["no_bound"] = true;
    j["fallback_reason"] = no_bound_reason;
  }
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace orient4

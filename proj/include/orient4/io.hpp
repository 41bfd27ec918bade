#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orient4/graph.hpp"
#include "orient4/mixed.hpp"
#include "orient4/pipeline.hpp"

namespace orient4 {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n m" then m lines "a b"; '#' starts a comment.
MultiGraph parse_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
std::string format_graph(const MultiGraph& g, const std::string& header_comment = {});

/// m lines "a b D" with D '>' (a->b) or '<' (b->a), aligned to edge order.
std::string format_orientation(const MixedOrientation& o);
MixedOrientation parse_orientation(const MultiGraph& g, std::istream& in);
MixedOrientation read_orientation_file(const MultiGraph& g, const std::string& path);

/// JSON report; `partition` is null for orientation-only verification. A
/// non-empty `no_bound_reason` marks a fallback orientation that carries no
/// diameter guarantee.
std::string report_json(const MultiGraph& g, const MixedOrientation& o, const VerificationReport& r,
                        const Partition* partition, const std::string& no_bound_reason = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace orient4

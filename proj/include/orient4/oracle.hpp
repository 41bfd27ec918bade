#pragma once

#include <cstdint>
#include <vector>

#include "orient4/graph.hpp"
#include "orient4/mixed.hpp"

namespace orient4 {

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int min_diameter = kInfinity;          // kInfinity iff no strong orientation exists
  std::vector<EdgeDirection> witness;    // empty when min_diameter is kInfinity
  std::uint64_t orientations_checked = 0;
};

struct OracleOptions {
  int max_edges = 20;
  /// Fix the last edge Forward; reversing every arc keeps strongness and
  /// diameter, so the optimum and its first witness are unchanged.
  bool half_space = true;
  /// log2 of the number of work chunks (clamped to the enumerated bits).
  int split_bits = 6;
};

/// OpenMP enumeration over chunks of the orientation space.
OracleResult min_oriented_diameter(const MultiGraph& g, const OracleOptions& options = {});
/// Single-threaded reference with the same enumeration order.
OracleResult min_oriented_diameter_serial(const MultiGraph& g, const OracleOptions& options = {});

/// Orientation for a bitmask: bit e clear means Forward.
MixedOrientation orientation_from_mask(const MultiGraph& g, std::uint64_t mask);

/// oracle <= pipeline and oracle >= d(G). Throws std::logic_error if the
/// oracle value is below d(G), which no orientation can achieve.
bool spot_check_bound(const MultiGraph& g, int oracle_min, int pipeline_diameter);

}  // namespace orient4

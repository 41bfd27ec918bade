#pragma once

#include <vector>

#include "orient4/graph.hpp"

// Hot loops with a serial reference and an OpenMP variant. The parallel
// variants must return exactly what the serial ones return.
namespace orient4::kernels {

using Adjacency = std::vector<std::vector<VertexId>>;

/// Max over all ordered pairs of the BFS distance along `out`; kInfinity if
/// some pair is unreachable.
int directed_diameter_serial(const Adjacency& out);
int directed_diameter_parallel(const Adjacency& out);

/// Number of OpenMP threads that parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace orient4::kernels

#include "orient4/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orient4::kernels {

namespace {

// Eccentricity of src; kInfinity as soon as some vertex stays unreached.
int eccentricity(const Adjacency& out, VertexId src, std::vector<int>& dist, std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : out[static_cast<std::size_t>(x)]) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != out.size()) return kInfinity;
  return dist[static_cast<std::size_t>(queue.back())];
}

}  // namespace

int directed_diameter_serial(const Adjacency& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> dist(out.size());
  std::vector<VertexId> queue;
  queue.reserve(out.size());
  int best = 0;
  for (VertexId s = 0; s < n; ++s) {
    best = std::max(best, eccentricity(out, s, dist, queue));
    if (best == kInfinity) break;
  }
  return best;
}

int directed_diameter_parallel(const Adjacency& out) {
  const int n = static_cast<int>(out.size());
  int best = 0;
#pragma omp parallel
  {
    std::vector<int> dist(out.size());
    std::vector<VertexId> queue;
    queue.reserve(out.size());
    int local = 0;
#pragma omp for schedule(dynamic, 4) nowait
    for (VertexId s = 0; s < n; ++s) local = std::max(local, eccentricity(out, s, dist, queue));
#pragma omp critical(orient4_diameter_merge)
    best = std::max(best, local);
  }
  return best;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace orient4::kernels

#include "orient4/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace orient4 {

namespace {

using Bits = std::uint64_t;

struct Space {
  int n = 0;
  int m = 0;
  int free_bits = 0;  // enumerated bits; the rest stay Forward
  std::vector<Edge> edges;
  Bits all = 0;
};

Space prepare(const MultiGraph& g, const OracleOptions& options) {
  if (g.edge_count() > options.max_edges)
    throw TooLargeError("graph has " + std::to_string(g.edge_count()) + " edges, oracle cap is " +
                        std::to_string(options.max_edges));
  if (g.vertex_count() > 64) throw TooLargeError("oracle handles at most 64 vertices");
  if (g.edge_count() > 62) throw TooLargeError("oracle handles at most 62 edges");
  Space s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.edges = g.edges();
  s.free_bits = s.m - (options.half_space && s.m > 0 ? 1 : 0);
  s.all = s.n == 64 ? ~Bits{0} : (Bits{1} << s.n) - 1;
  return s;
}

// Directed diameter of one orientation, or kInfinity as soon as it is known
// to exceed `limit`.
int diameter_capped(const Space& s, Bits mask, int limit, std::vector<Bits>& out) {
  std::fill(out.begin(), out.end(), 0);
  Bits has_out = 0, has_in = 0;
  for (int e = 0; e < s.m; ++e) {
    const Edge& ed = s.edges[static_cast<std::size_t>(e)];
    const bool back = (mask >> e) & 1;
    const VertexId t = back ? ed.b : ed.a, h = back ? ed.a : ed.b;
    out[static_cast<std::size_t>(t)] |= Bits{1} << h;
    has_out |= Bits{1} << t;
    has_in |= Bits{1} << h;
  }
  if (s.n > 1 && (has_out != s.all || has_in != s.all)) return kInfinity;
  int worst = 0;
  for (int src = 0; src < s.n; ++src) {
    Bits reached = Bits{1} << src, frontier = reached;
    int depth = 0;
    while (reached != s.all) {
      Bits next = 0;
      for (Bits f = frontier; f; f &= f - 1) next |= out[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~reached;
      if (!next) return kInfinity;
      if (++depth > limit) return kInfinity;
      reached |= next;
      frontier = next;
    }
    worst = std::max(worst, depth);
  }
  return worst;
}

struct Best {
  int value = kInfinity;
  Bits mask = 0;
};

// Scans masks [lo, hi) in order. Local pruning keeps only strict
// improvements; the shared bound prunes only values strictly worse than it,
// so ties with the global optimum survive for the (value, mask) merge.
Best scan(const Space& s, Bits lo, Bits hi, const std::atomic<int>* shared, std::uint64_t& checked) {
  std::vector<Bits> out(static_cast<std::size_t>(std::max(s.n, 1)));
  Best best;
  for (Bits mask = lo; mask < hi; ++mask) {
    ++checked;
    int limit = best.value == kInfinity ? s.n : best.value - 1;
    if (shared) limit = std::min(limit, shared->load(std::memory_order_relaxed));
    const int d = diameter_capped(s, mask, limit, out);
    if (d < best.value) best = {d, mask};
  }
  return best;
}

OracleResult finish(const MultiGraph& g, const Best& best, std::uint64_t checked) {
  OracleResult r;
  r.orientations_checked = checked;
  r.min_diameter = best.value;
  if (best.value != kInfinity) r.witness = orientation_from_mask(g, best.mask).directions();
  return r;
}

}  // namespace

MixedOrientation orientation_from_mask(const MultiGraph& g, std::uint64_t mask) {
  MixedOrientation o(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    o.set_direction(e, (mask >> e) & 1 ? EdgeDirection::Backward : EdgeDirection::Forward, "oracle");
  return o;
}

OracleResult min_oriented_diameter_serial(const MultiGraph& g, const OracleOptions& options) {
  const Space s = prepare(g, options);
  if (s.n <= 1) return finish(g, {0, 0}, 1);
  std::uint64_t checked = 0;
  const Best best = scan(s, 0, Bits{1} << s.free_bits, nullptr, checked);
  return finish(g, best, checked);
}

OracleResult min_oriented_diameter(const MultiGraph& g, const OracleOptions& options) {
  const Space s = prepare(g, options);
  if (s.n <= 1) return finish(g, {0, 0}, 1);
  const int split = std::clamp(options.split_bits, 0, s.free_bits);
  const Bits chunks = Bits{1} << split;
  const Bits width = Bits{1} << (s.free_bits - split);
  std::vector<Best> found(static_cast<std::size_t>(chunks));
  std::atomic<int> shared{s.n};
  std::uint64_t checked = 0;
  const auto count = static_cast<long long>(chunks);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : checked)
  for (long long c = 0; c < count; ++c) {
    const Bits lo = static_cast<Bits>(c) * width;
    Best b = scan(s, lo, lo + width, &shared, checked);
    found[static_cast<std::size_t>(c)] = b;
    int seen = shared.load(std::memory_order_relaxed);
    while (b.value < seen && !shared.compare_exchange_weak(seen, b.value, std::memory_order_relaxed)) {
    }
  }
  Best best;
  for (const Best& b : found)
    if (b.value < best.value || (b.value == best.value && b.value != kInfinity && b.mask < best.mask)) best = b;
  return finish(g, best, checked);
}

bool spot_check_bound(const MultiGraph& g, int oracle_min, int pipeline_diameter) {
  const int d = diameter(g);
  if (oracle_min < d) throw std::logic_error("oracle value " + std::to_string(oracle_min) + " is below d(G)=" +
                                             std::to_string(d));
  return oracle_min <= pipeline_diameter;
}

}  // namespace orient4

#include "orient4/constructions.hpp"

#include <algorithm>

namespace orient4 {

namespace {

class Stage {
 public:
  Stage(MixedOrientation& o, const Partition& p, std::string tag)
      : o(o), g(o.graph()), L(p.labels), u(p.base.u), v(p.base.v), n(g.vertex_count()), tag(std::move(tag)) {}

  Mask m(std::initializer_list<const char*> cells) const { return L.mask(cells); }
  Mask cells(const std::vector<std::string>& names) const { return L.mask(names); }
  // prefix+lo .. prefix+hi
  Mask range(const std::string& prefix, int lo, int hi) const {
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back(prefix + std::to_string(i));
    return L.mask(names);
  }
  Mask one(VertexId w) const { return to_mask(n, {w}); }
  Mask empty() const { return Mask(static_cast<std::size_t>(n), 0); }
  Mask neighbours(VertexId w, const Mask& within) const {
    Mask out = empty();
    for (const auto& inc : g.incident(w))
      if (within[static_cast<std::size_t>(inc.neighbor)]) out[static_cast<std::size_t>(inc.neighbor)] = 1;
    return out;
  }

  // Every edge with one end in `from` and the other in `to` becomes from -> to.
  void arcs(const Mask& from, const Mask& to) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      const auto a = static_cast<std::size_t>(ed.a), b = static_cast<std::size_t>(ed.b);
      const bool ab = from[a] && to[b], ba = from[b] && to[a];
      if (ab && ba)
        throw InternalError("stage " + tag + ": edge " + std::to_string(e) + " has both ends in source and target");
      if (ab) o.orient_from(e, ed.a, tag);
      if (ba) o.orient_from(e, ed.b, tag);
    }
  }
  void out_of(VertexId w, const Mask& to) { arcs(one(w), to); }
  void into(const Mask& from, VertexId w) { arcs(from, one(w)); }

  void rs(const Mask& r, const Mask& s) { rs_orient(o, from_mask(r), from_mask(s), tag); }
  void two_ways(VertexId w, const Mask& targets) { orient_two_ways(o, w, targets, tag); }

  // Lowest-id edge from w into `pick` gets the distinguished direction, every
  // other edge of [w, all] the opposite one.
  void pivot(VertexId w, const Mask& pick, const Mask& all, bool pick_inward) {
    EdgeId chosen = -1;
    for (const auto& inc : g.incident(w))
      if (pick[static_cast<std::size_t>(inc.neighbor)] && (chosen < 0 || inc.edge < chosen)) chosen = inc.edge;
    if (chosen < 0) throw NotFoundError(tag, w, "no edge into the designated set");
    for (const auto& inc : g.incident(w)) {
      if (!all[static_cast<std::size_t>(inc.neighbor)] && inc.edge != chosen) continue;
      const bool inward = (inc.edge == chosen) == pick_inward;
      o.orient_from(inc.edge, inward ? inc.neighbor : w, tag);
    }
  }

  bool walk(const WalkQuery& q) {
    const auto found = find_mixed_walk(o, q);
    if (!found) return false;
    orient_walk(o, *found, tag);
    return true;
  }

  EdgeId lowest_edge(VertexId a, VertexId b) const {
    for (const auto& inc : g.incident(a))
      if (inc.neighbor == b) return inc.edge;  // incidences are sorted by (neighbour, edge)
    return -1;
  }

  // Mixed cycle of length edge_girth(e) through the lowest-id hub-w edge.
  void girth_cycle(VertexId hub, VertexId w) {
    const EdgeId e0 = lowest_edge(hub, w);
    const int r = edge_girth(g, e0);
    if (r == kInfinity) throw NotFoundError(tag, w, "edge to the hub lies on no cycle");
    WalkQuery q;
    q.prefix = {hub, w};
    q.prefix_edges = {e0};
    q.steps.assign(static_cast<std::size_t>(r - 2), [](VertexId) { return true; });
    q.closure = Closure::Closed;
    if (!walk(q)) throw NotFoundError(tag, w, "no mixed " + std::to_string(r) + "-cycle through the hub edge");
  }

  bool in(const Mask& mask, VertexId w) const { return mask[static_cast<std::size_t>(w)] != 0; }
  bool has(VertexId w, const Mask& mask) const { return has_neighbor_in(g, w, mask); }

  MixedOrientation& o;
  const MultiGraph& g;
  const FineLabels& L;
  const VertexId u, v;
  const int n;
  const std::string tag;
};

Mask layer(const Partition& p, int i, int j) {
  return to_mask(static_cast<int>(p.layers.cell.size()), p.layers.members(i, j));
}

// ------------------------------------------------------------------ stages

void cons1(Stage& s, const Partition& p) {
  const Mask s22 = layer(p, 2, 2), s33 = layer(p, 3, 3);
  const Mask A = s.m({"A"}), B = s.m({"B"}), I = s.m({"I"}), J = s.m({"J"}), K = s.m({"K"}), L = s.m({"L"}),
             M = s.m({"M"});
  s.arcs(s.one(s.u), s.one(s.v));
  s.arcs(B, unite(A, J));
  s.arcs(unite(B, J), s22);
  s.arcs(s22, unite(A, I));
  s.arcs(J, unite(I, s33));
  s.arcs(L, unite(unite(s33, K), M));
  s.arcs(s33, unite(K, I));
  s.arcs(M, K);
  s.arcs(K, I);
  s.arcs(J, s.m({"L1", "L2", "L4"}));
  const Mask l3 = s.m({"L3"});
  Mask lp_near_l3 = s.empty();
  for (VertexId w : s.L.members("L'"))
    if (s.has(w, l3)) lp_near_l3[static_cast<std::size_t>(w)] = 1;
  s.arcs(J, lp_near_l3);
  s.arcs(unite(s.m({"L'"}), minus(J, s.m({"J1"}))), l3);
  s.arcs(l3, s.m({"J1"}));
  s.arcs(s.range("I", 1, 5), A);
  s.arcs(s.range("A", 1, 8), s.one(s.u));
  s.arcs(s.one(s.v), s.range("B", 1, 9));
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j) {
      const std::string a = std::to_string(i), b = std::to_string(j);
      if (j <= 8) s.arcs(s.cells({"A" + a}), s.cells({"A" + b}));
      s.arcs(s.cells({"B" + b}), s.cells({"B" + a}));
      if (j <= 5) {
        s.arcs(s.cells({"I" + a}), s.cells({"I" + b}));
        s.arcs(s.cells({"J" + b}), s.cells({"J" + a}));
      }
      if (j <= 3) s.arcs(s.cells({"K" + a}), s.cells({"K" + b}));
      if (j <= 4) s.arcs(s.cells({"L" + b}), s.cells({"L" + a}));
    }
}

void cons4(Stage& s, const Partition& p) {
  const Mask s22 = layer(p, 2, 2);
  const Mask I = s.m({"I"}), J = s.m({"J"}), KM1 = s.m({"K", "M1"});
  for (VertexId w : s.L.members("X")) {
    const int c = edges_into(s.g, w, s22);
    if (c >= 2) {
      s.two_ways(w, s22);
    } else if (c == 1) {
      if (s.has(w, J)) {
        s.out_of(w, s22);
      } else if (s.has(w, I)) {
        s.into(s22, w);
      } else if (s.has(w, KM1)) {
        s.into(s22, w);
        s.out_of(w, KM1);
      } else {
        s.out_of(w, s22);
      }
    }
  }
}

void cons5(Stage& s, const Partition& p) {
  const Mask s22 = layer(p, 2, 2), s33 = layer(p, 3, 3), s44 = layer(p, 4, 4);
  const Mask x1 = s.m({"X'1"}), x2 = s.m({"X'2"}), x3 = s.m({"X'3"});
  s.arcs(s.m({"M2"}), x2);
  s.arcs(x2, s22);
  s.arcs(s22, x1);
  s.arcs(x1, s.m({"M1"}));
  s.arcs(s.m({"X"}), x3);
  s.arcs(x3, s22);
  s.rs(s22, s.m({"X'5"}));

  const Mask far = unite(s22, s.m({"I", "J"}));
  const Mask mp = s.m({"M'"}), w1_pool = s.m({"M'", "M3"});
  auto is = [](const Mask& mask) { return [mask](VertexId x) { return mask[static_cast<std::size_t>(x)] != 0; }; };
  for (VertexId w : s.L.members("X'4")) {
    if (!s.o.is_undirected_vertex(w)) continue;
    if (s.has(w, x1)) {
      s.into(x1, w);
      s.out_of(w, s22);
      continue;
    }
    if (s.has(w, unite(x2, x3))) {
      s.into(s22, w);
      s.out_of(w, unite(x2, x3));
      continue;
    }
    VertexId w0 = -1, w1 = -1;
    int best = 0;
    for (VertexId x : s.g.neighbors(w)) {
      if (w0 < 0 && s.in(s22, x)) w0 = x;
      if (!s.in(w1_pool, x)) continue;
      const int count = static_cast<int>(from_mask(s.neighbours(x, s33)).size());
      if (count > best) best = count, w1 = x;
    }
    if (w0 < 0 || w1 < 0) throw NotFoundError(s.tag, w, "no S22 neighbour or no M'/M3 neighbour");
    bool done = false;
    if (best >= 2) {
      WalkQuery q;
      q.prefix = {w0, w, w1};
      q.steps = {is(s33), is(far)};
      q.closure = Closure::Either;
      done = s.walk(q);
    } else {
      WalkQuery q;
      q.prefix = {w0, w};
      q.steps = {is(mp), is(s44), is(s33)};
      q.closure = Closure::Closed;
      done = s.walk(q);
      if (!done) {
        q.steps.push_back(is(far));
        q.closure = Closure::Either;
        done = s.walk(q);
      }
    }
    if (!done) throw NotFoundError(s.tag, w, "X'4 closure walk");
  }
}

void cons6(Stage& s, const Partition& p) {
  const Mask s33 = layer(p, 3, 3);
  const Mask m21 = s.m({"M'21"});
  s.arcs(s.m({"M2"}), s.m({"X", "X'1"}));
  s.arcs(s.m({"X"}), s.m({"M1"}));
  s.arcs(s.m({"M"}), m21);
  s.arcs(m21, s33);
  s.arcs(s33, s.m({"M'22"}));
  s.arcs(s.m({"M'22"}), s.m({"M'1", "M'21"}));
  s.rs(s33, s.m({"M'23"}));
  for (VertexId w : s.L.members("M32")) s.two_ways(w, s33);
}

void cons2(Stage& s, const Partition&) {
  s.rs(s.one(s.v), s.m({"B10(2)"}));
  const Mask bb = s.m({"B", "B'"});
  const Mask t_pool = minus(bb, s.m({"B10"}));
  for (VertexId w : s.L.members("B10(1)")) {
    if (!s.o.is_undirected_vertex(w)) continue;
    if (s.has(w, bb)) {
      const Mask t = s.neighbours(w, t_pool);
      s.arcs(s.one(s.v), t);
      s.into(t, w);
      s.out_of(w, s.one(s.v));
    } else {
      s.girth_cycle(s.v, w);
    }
  }
}

// Shared by cons3 (hub v, B side) and cons10 (hub u, A side).
void hub_pendants(Stage& s, VertexId hub, const char* primed, const char* first, const char* second,
                  const char* third, const char* plain) {
  s.rs(s.one(hub), s.m({third}));
  const Mask pm = s.m({primed}), p1 = s.m({first}), side = s.m({plain});
  for (VertexId w : s.L.members(second)) {
    if (!s.o.is_undirected_vertex(w)) continue;
    if (s.has(w, pm)) {
      if (hub == s.v) {
        s.into(p1, w);
        s.out_of(w, s.one(hub));
      } else {
        const Mask t = s.neighbours(w, p1);
        s.into(s.one(hub), w);
        s.out_of(w, t);
        s.arcs(t, s.one(hub));
      }
    } else if (edges_into(s.g, w, s.one(hub)) >= 2) {
      s.two_ways(w, s.one(hub));
    } else {
      WalkQuery q;
      q.prefix = {hub, w};
      q.steps = {[&side](VertexId x) { return side[static_cast<std::size_t>(x)] != 0; }};
      q.closure = Closure::Closed;
      if (!s.walk(q)) throw NotFoundError(s.tag, w, "no mixed 3-cycle through the hub");
    }
  }
}

void cons3(Stage& s, const Partition&) { hub_pendants(s, s.v, "B'", "B'1", "B'2", "B'3", "B"); }

void cons8_2(Stage& s, const Partition&) {
  const Mask J = s.m({"J"}), J1 = s.m({"J1"}), J14 = s.range("J", 1, 4), L = s.m({"L"});
  const Mask l11 = s.m({"L'11"}), l12 = s.m({"L'12"}), l13 = s.m({"L'13"}), l2 = s.m({"L'2"});
  s.arcs(s.m({"J5", "J6"}), s.m({"L'"}));
  s.arcs(J, s.m({"L'11", "L'13", "L'2"}));
  s.arcs(s.m({"L'11", "L'13", "L'2"}), L);
  s.arcs(s.m({"L2"}), l12);
  s.arcs(l12, J1);
  s.arcs(J, s.m({"L'51", "L'42"}));
  s.arcs(s.m({"L'51", "L'42"}), s.m({"L'41"}));
  s.arcs(s.m({"L'41"}), J1);
  const Mask low = unite(J14, s.m({"L'11", "L'12"}));
  s.arcs(s.m({"L'51"}), s.m({"L'52"}));
  s.arcs(s.m({"L'52"}), s.m({"L'53"}));
  s.arcs(s.m({"L'53"}), low);
  s.arcs(s.m({"L'52"}), low);

  const auto dk = distance_to_set(s.g, s.m({"K'"}));
  const Mask lp = s.m({"L'"}), l1 = s.m({"L'1"}), l4 = s.m({"L4"});
  const Mask l_in = s.m({"L'11", "L'13", "L'2"});
  for (VertexId w : s.L.members("L'3")) {
    bool via_j = false, via_l1 = false;
    for (VertexId x : s.g.neighbors(w)) {
      if (dk[static_cast<std::size_t>(x)] + 1 != dk[static_cast<std::size_t>(w)]) continue;
      via_j = via_j || s.in(J14, x);
      via_l1 = via_l1 || s.in(l1, x);
    }
    if (s.has(w, lp)) {
      if (via_j && s.has(w, l_in)) {
        s.into(l_in, w);
        s.out_of(w, J14);
      } else if (via_j && s.has(w, l12)) {
        s.into(J14, w);
        s.out_of(w, l12);
      } else if (via_l1) {
        s.into(J, w);
        s.out_of(w, l1);
      } else {
        throw NotFoundError(s.tag, w, "L'3 vertex with no admissible first step");
      }
    } else if (s.has(w, L)) {
      s.into(l4, w);
      s.out_of(w, J14);
    } else {
      s.pivot(w, J14, J, false);
    }
  }
  s.rs(J1, s.m({"L'43"}));
  s.rs(J14, s.m({"L'54"}));
}

void cons8_1(Stage& s, const Partition&) {
  const Mask B = s.m({"B"}), J = s.m({"J"}), B16 = s.range("B", 1, 6), B710 = s.range("B", 7, 10),
             J46 = s.range("J", 4, 6);
  const Mask j2 = s.m({"J'2"}), j51 = s.m({"J'51"}), j52 = s.m({"J'52"}), j61 = s.m({"J'61"}), j62 = s.m({"J'62"});
  s.arcs(B, j2);
  s.arcs(j2, J);
  s.arcs(s.m({"B8", "B9"}), s.m({"J'1"}));
  s.arcs(j62, B710);
  s.arcs(B710, j61);
  s.arcs(j61, unite(j51, j62));
  s.arcs(B16, j52);
  s.arcs(j52, j51);
  s.arcs(j51, B16);
  s.arcs(J46, s.m({"J'31"}));
  s.arcs(s.m({"J'31"}), B16);
  s.arcs(B, s.m({"J'32"}));
  s.arcs(s.m({"J'32"}), J46);
  s.arcs(s.m({"J'32", "J'42", "J'6"}), s.m({"J'1", "J'2", "J'31", "J'41", "J'5"}));
  s.rs(B16, s.m({"J'53"}));
  s.rs(B710, s.m({"J'63"}));

  const Mask jp = s.m({"J'"}), j13 = s.m({"J'1", "J'2", "J'3"}), j41 = s.m({"J'41"});
  for (VertexId w : s.L.members("J'4")) {
    const bool first = s.in(j41, w);
    if (s.has(w, jp)) {
      if (first) {
        s.into(j13, w);
        s.out_of(w, B16);
      } else {
        s.into(B710, w);
        s.out_of(w, j13);
      }
    } else if (first) {
      s.pivot(w, B16, B, false);
    } else {
      s.two_ways(w, B);
    }
  }
}

void cons8(Stage& s, const Partition&) {
  const Mask A = s.m({"A"}), A13 = s.range("A", 1, 3), I = s.m({"I"}), Kp = s.m({"K'"}), K = s.m({"K"});
  const Mask i611 = s.m({"I61(1)"});
  s.arcs(A13, i611);
  s.arcs(i611, s.m({"I62"}));
  s.rs(A13, s.m({"I61(3)"}));

  const Mask ii = s.m({"I", "I'"});
  const Mask low = minus(I, s.m({"I6"}));
  const Mask low_p = unite(low, s.m({"I'"}));
  const Mask spread = unite(low_p, i611);
  auto is = [](const Mask& mask) { return [mask](VertexId x) { return mask[static_cast<std::size_t>(x)] != 0; }; };
  // Arcs from A into I must start in A1..A3.
  auto a_ok = [&](std::size_t tail_index) {
    return [&, tail_index](const MixedWalk& walk, int sign) {
      return sign >= 0 || s.in(A13, walk.vertices[tail_index]);
    };
  };
  for (VertexId w : s.L.members("I61(2)")) {
    if (!s.o.is_undirected_vertex(w)) continue;
    if (s.has(w, ii)) {
      s.into(A13, w);
      s.out_of(w, spread);
      s.arcs(s.neighbours(w, low_p), A);
      continue;
    }
    if (edges_into(s.g, w, A) >= 2) {
      s.pivot(w, A13, A, true);
      continue;
    }
    VertexId w0 = -1, w1 = -1;
    int best = 0;
    for (VertexId x : s.g.neighbors(w)) {
      if (w0 < 0 && s.in(A13, x)) w0 = x;
      if (!s.in(Kp, x)) continue;
      const int count = static_cast<int>(from_mask(s.neighbours(x, I)).size());
      if (count > best) best = count, w1 = x;
    }
    if (w0 < 0 || w1 < 0) throw NotFoundError(s.tag, w, "no A1..A3 neighbour or no K' neighbour");
    bool done = false;
    if (best >= 2) {
      WalkQuery q;
      q.prefix = {w0, w, w1};
      q.steps = {is(I), is(A)};
      q.closure = Closure::Either;
      q.accept = a_ok(4);
      done = s.walk(q);
    } else {
      WalkQuery q;
      q.prefix = {w0, w};
      q.steps = {is(Kp), is(unite(Kp, K)), is(I)};
      q.closure = Closure::Closed;
      done = s.walk(q);
      if (!done) {
        q.steps.push_back(is(A));
        q.closure = Closure::Either;
        q.accept = a_ok(5);
        done = s.walk(q);
      }
    }
    if (!done) throw NotFoundError(s.tag, w, "I61(2) closure walk");
  }
}

void cons8_5(Stage& s, const Partition&) {
  const Mask A = s.m({"A"}), I = s.m({"I"}), uu = s.one(s.u);
  const Mask a_core = minus(A, s.m({"A94", "A95"}));
  const Mask i611 = s.m({"I61(1)"}), i621 = s.m({"I62(1)"});
  s.arcs(s.range("A", 1, 3), i611);
  s.arcs(i611, i621);
  s.arcs(i621, a_core);
  s.arcs(a_core, uu);
  s.arcs(minus(s.m({"I61"}), s.m({"I61(22)"})), s.m({"I'2"}));
  s.arcs(minus(I, s.m({"I62"})), s.m({"I'1", "I'2"}));
  s.arcs(s.m({"I'1", "I'2"}), a_core);
  s.arcs(s.m({"I61", "I62(1)", "I62(2)"}), s.m({"A93"}));
  s.rs(uu, s.m({"A95"}));

  const Mask aa = s.m({"A", "A'"});
  const Mask t_pool = minus(aa, s.m({"A94", "A95"}));
  for (VertexId w : s.L.members("A94")) {
    if (!s.o.is_undirected_vertex(w)) continue;
    if (s.has(w, aa)) {
      const Mask t = s.neighbours(w, t_pool);
      s.into(uu, w);
      s.out_of(w, t);
      s.arcs(t, uu);
    } else {
      s.girth_cycle(s.u, w);
    }
  }
}

void cons10(Stage& s, const Partition&) { hub_pendants(s, s.u, "A'", "A'1", "A'2", "A'3", "A"); }

void cons12(Stage& s, const Partition&) {
  const Mask A = s.m({"A"}), I = s.m({"I"}), A16 = s.range("A", 1, 6), A79 = s.range("A", 7, 9),
             A14 = s.range("A", 1, 4), A59 = s.range("A", 5, 9);
  const Mask i623 = s.m({"I62(3)"});
  const Mask i41_51 = s.m({"I'41", "I'51"}), i52 = s.m({"I'52"}), i42 = s.m({"I'42"});
  const Mask i71 = s.m({"I'71"}), i72 = s.m({"I'72"}), i81 = s.m({"I'81"}), i82 = s.m({"I'82"});
  s.arcs(A16, i41_51);
  s.arcs(i41_51, I);
  s.arcs(A79, i52);
  s.arcs(i52, I);
  s.arcs(minus(I, i623), i42);
  s.arcs(i42, unite(A, i623));
  s.arcs(A14, i71);
  s.arcs(i71, i81);
  s.arcs(i81, A);
  s.arcs(i71, i72);
  s.arcs(i72, A14);
  s.arcs(A59, i82);
  s.arcs(i82, i81);
  const Mask lower = unite(s.m({"I'1", "I'2", "I'3"}), minus(I, s.m({"I6"})));
  s.arcs(lower, s.m({"I62(32)", "I62(33)"}));
  s.arcs(s.m({"I62(32)", "I62(33)"}), A);
  s.arcs(s.m({"I'1", "I'2", "I'3", "I'4", "I'51", "I'61", "I'7"}), s.m({"I'52", "I'62", "I'8"}));
  s.rs(A14, s.m({"I'73"}));
  s.rs(A59, s.m({"I'83"}));

  const Mask ip = s.m({"I'"}), i15 = s.range("I'", 1, 5), i61 = s.m({"I'61"});
  const Mask feed = s.m({"I'1", "I'2", "I'3", "I'4", "I'51"});
  for (VertexId w : s.L.members("I'6")) {
    const bool first = s.in(i61, w);
    if (s.has(w, ip)) {
      if (first) {
        s.into(A16, w);
        s.out_of(w, i15);
      } else if (s.has(w, feed)) {
        s.into(feed, w);
        s.out_of(w, A);
      } else {
        s.into(A79, w);
        s.out_of(w, i52);
      }
    } else if (first) {
      s.pivot(w, A16, A, true);
    } else {
      s.two_ways(w, A);
    }
  }
}

void cons11(Stage& s, const Partition&) {
  const Mask I = s.m({"I"}), K = s.m({"K"}), Kp = s.m({"K'"});
  const Mask istar = to_mask(s.n, s.L.istar);
  const Mask i623 = s.m({"I62(3)"}), i_low = minus(I, i623), i_mid = s.m({"I62(31)", "I62(32)"});
  const Mask k1 = s.m({"K'1"}), k21 = s.m({"K'21"}), k3 = s.m({"K'3"});
  const Mask k81 = s.m({"K'81"}), k91 = s.m({"K'91"});
  s.arcs(Kp, s.m({"I62(33)"}));
  s.arcs(istar, k21);
  s.arcs(unite(k1, k21), k3);
  s.arcs(k3, I);
  s.arcs(K, s.m({"K'2", "K'3"}));
  s.arcs(K, s.m({"K'4"}));
  s.arcs(s.m({"K'4"}), I);
  s.arcs(i_low, s.m({"K'5"}));
  s.arcs(i_mid, s.m({"K'6"}));
  s.arcs(i_low, k81);
  s.arcs(k81, k91);
  s.arcs(k91, i_mid);
  s.arcs(k81, s.m({"K'82"}));
  s.arcs(s.m({"K'82"}), i_low);
  s.arcs(i_mid, s.m({"K'92"}));
  s.arcs(s.m({"K'92"}), k91);

  for (VertexId w : s.L.members("K'22")) {
    if (s.has(w, Kp)) {
      if (s.has(w, k1)) {
        s.into(istar, w);
        s.out_of(w, k1);
      } else {
        s.into(k21, w);
        s.out_of(w, istar);
      }
    } else if (s.has(w, K)) {
      s.into(K, w);
      s.out_of(w, istar);
    } else {
      s.pivot(w, istar, I, true);
    }
  }
  const Mask i_not_top = minus(I, s.m({"I62(33)"})), k36 = s.range("K'", 3, 6);
  for (VertexId w : s.L.members("K'7")) {
    if (s.has(w, Kp)) {
      s.into(i_not_top, w);
      s.out_of(w, k36);
    } else if (s.has(w, i_low)) {
      s.pivot(w, i_low, I, true);
    } else {
      s.two_ways(w, I);
    }
  }
  s.rs(istar, s.m({"K'23"}));
  s.rs(i_low, s.m({"K'83"}));
  s.rs(i_mid, s.m({"K'93"}));

  for (EdgeId e = 0; e < s.g.edge_count(); ++e) {
    if (s.o.is_directed(e)) continue;
    const Edge& ed = s.g.edge(e);
    s.o.orient_from(e, std::min(ed.a, ed.b), s.tag);
  }
}

}  // namespace

std::string stage_tag(StageId stage) {
  switch (stage) {
    case StageId::Cons1: return "cons1";
    case StageId::Cons4: return "cons4";
    case StageId::Cons5: return "cons5";
    case StageId::Cons6: return "cons6";
    case StageId::Cons2: return "cons2";
    case StageId::Cons3: return "cons3";
    case StageId::Cons8_2: return "cons8_2";
    case StageId::Cons8_1: return "cons8_1";
    case StageId::Cons8: return "cons8";
    case StageId::Cons8_5: return "cons8.5";
    case StageId::Cons10: return "cons10";
    case StageId::Cons12: return "cons12";
    case StageId::Cons11: return "cons11";
  }
  return "?";
}

void apply_stage(MixedOrientation& o, const Partition& p, StageId stage) {
  Stage s(o, p, stage_tag(stage));
  switch (stage) {
    case StageId::Cons1: return cons1(s, p);
    case StageId::Cons4: return cons4(s, p);
    case StageId::Cons5: return cons5(s, p);
    case StageId::Cons6: return cons6(s, p);
    case StageId::Cons2: return cons2(s, p);
    case StageId::Cons3: return cons3(s, p);
    case StageId::Cons8_2: return cons8_2(s, p);
    case StageId::Cons8_1: return cons8_1(s, p);
    case StageId::Cons8: return cons8(s, p);
    case StageId::Cons8_5: return cons8_5(s, p);
    case StageId::Cons10: return cons10(s, p);
    case StageId::Cons12: return cons12(s, p);
    case StageId::Cons11: return cons11(s, p);
  }
}

}  // namespace orient4

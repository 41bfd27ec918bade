// Independent re-evaluation of the cell predicates. Each family lists its
// children in definition order; a child must equal exactly the vertices of
// the parent that satisfy its predicate and none of the earlier ones.

#include <functional>

#include "orient4/partition.hpp"

namespace orient4 {

namespace {

using ChildPred = std::function<bool(VertexId, const Mask& rest)>;

struct Child {
  std::string name;
  ChildPred pred;
};

class Checker {
 public:
  Checker(const MultiGraph& g, const Partition& p) : g_(g), p_(p), L_(p.labels), n_(g.vertex_count()) {}

  Mask m(std::initializer_list<const char*> cells) const { return L_.mask(cells); }
  Mask named(const std::vector<std::string>& cells) const { return L_.mask(cells); }
  Mask range(const std::string& prefix, int lo, int hi) const {
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back(prefix + std::to_string(i));
    return L_.mask(names);
  }
  Mask layer(int i, int j) const { return to_mask(n_, p_.layers.members(i, j)); }

  ChildPred near(const Mask& set) const {
    return [this, set](VertexId w, const Mask&) { return has_neighbor_in(g_, w, set); };
  }
  ChildPred isolated() const {
    return [this](VertexId w, const Mask& rest) { return isolated_in(g_, w, rest); };
  }
  static ChildPred any() {
    return [](VertexId, const Mask&) { return true; };
  }
  ChildPred member(const Mask& set) const {
    return [set](VertexId w, const Mask&) { return set[static_cast<std::size_t>(w)] != 0; };
  }

  void family(const std::string& parent, const std::vector<Child>& children) {
    Mask rest = to_mask(n_, L_.members(parent));
    for (const auto& child : children) {
      Mask expected(static_cast<std::size_t>(n_), 0);
      for (VertexId w = 0; w < n_; ++w)
        if (rest[static_cast<std::size_t>(w)] && child.pred(w, rest)) expected[static_cast<std::size_t>(w)] = 1;
      const Mask actual = to_mask(n_, L_.members(child.name));
      for (VertexId w = 0; w < n_; ++w) {
        const auto i = static_cast<std::size_t>(w);
        if (expected[i] && !actual[i]) fail("vertex " + std::to_string(w) + " satisfies " + child.name + " but is labelled " + L_.joined(w));
        if (!expected[i] && actual[i]) fail("vertex " + std::to_string(w) + " is labelled " + child.name + " but fails its predicate");
      }
      rest = minus(rest, expected);
    }
    for (VertexId w : from_mask(rest)) fail("vertex " + std::to_string(w) + " of " + parent + " fits no sub-cell");
  }

  void fact(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) { out.push_back(what); }

  std::vector<std::string> out;

  const MultiGraph& g_;
  const Partition& p_;
  const FineLabels& L_;
  const int n_;
};

void check_layers(Checker& c, const MultiGraph& g, const Partition& p) {
  const auto du = bfs_distances(g, p.base.u), dv = bfs_distances(g, p.base.v);
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const auto i = static_cast<std::size_t>(w);
    c.fact(p.layers.cell[i] == std::pair(du[i], dv[i]), "vertex " + std::to_string(w) + " has a stale layer");
  }
  c.fact(p.layers.members(1, 1).empty(), "S11 is not empty");
  c.fact(edge_girth(g, p.base.e) == p.base.gstar && graph_edge_girth(g) == p.base.gstar, "base edge misses g*");
}

void check_coarse(Checker& c, const MultiGraph& g) {
  auto inside = [&](const Mask& allowed) {
    return [&g, allowed](VertexId w, const Mask&) {
      for (const auto& inc : g.incident(w))
        if (!allowed[static_cast<std::size_t>(inc.neighbor)]) return false;
      return true;
    };
  };
  auto layer_family = [&](int i, int j, const Mask& allowed, const char* primed, const char* plain) {
    const Mask layer = c.layer(i, j);
    Mask rest = layer;
    for (VertexId w : from_mask(layer)) {
      const bool want_primed = inside(allowed)(w, rest);
      c.fact(c.L_.in(w, want_primed ? primed : plain),
             "vertex " + std::to_string(w) + " should be in " + (want_primed ? primed : plain));
    }
  };
  layer_family(1, 2, unite(c.layer(1, 2), c.layer(0, 1)), "A'", "A");
  layer_family(2, 1, unite(c.layer(2, 1), c.layer(1, 0)), "B'", "B");
  layer_family(2, 3, unite(c.layer(2, 3), c.m({"A"})), "I'", "I");
  layer_family(3, 2, unite(c.layer(3, 2), c.m({"B"})), "J'", "J");
  layer_family(3, 4, unite(c.layer(3, 4), c.m({"I"})), "K'", "K");
  layer_family(4, 3, unite(c.layer(4, 3), c.m({"J"})), "L'", "L");
  const Mask xt = unite(c.layer(2, 2), c.m({"I", "J", "K", "L"}));
  for (VertexId w : from_mask(c.layer(3, 3)))
    c.fact(c.L_.in(w, edges_into(g, w, xt) == 1 ? "X'" : "X"), "vertex " + std::to_string(w) + " misfiled in S33");
  const Mask mt = unite(c.layer(3, 3), c.m({"K", "L"}));
  for (VertexId w : from_mask(c.layer(4, 4)))
    c.fact(c.L_.in(w, edges_into(g, w, mt) == 1 ? "M'" : "M"), "vertex " + std::to_string(w) + " misfiled in S44");
}

void check_static(Checker& c, const MultiGraph& g) {
  const Mask s22 = c.layer(2, 2), s33 = c.layer(3, 3);
  const auto all = Checker::any();
  c.family("M", {{"M1", c.near(c.m({"K"}))}, {"M2", c.near(c.m({"L"}))}, {"M3", all}});
  c.family("X'", {{"X'1", c.near(c.m({"M1"}))},
                  {"X'2", c.near(c.m({"M2"}))},
                  {"X'3", c.near(c.m({"X"}))},
                  {"X'4", c.isolated()},
                  {"X'5", all}});
  c.family("K", {{"K1", c.near(unite(s33, c.m({"L"})))}, {"K2", c.near(c.m({"K1"}))}, {"K3", all}});
  c.family("I", {{"I1", c.near(unite(s22, c.m({"J"})))},
                 {"I2", c.near(s33)},
                 {"I3", c.near(c.m({"I1"}))},
                 {"I4", c.near(c.m({"I2", "K1"}))},
                 {"I5", c.near(c.m({"K2", "K3"}))},
                 {"I6", all}});
  c.family("J", {{"J1", c.near(unite(s22, c.m({"I"})))},
                 {"J2", c.near(s33)},
                 {"J3", c.near(c.m({"J1"}))},
                 {"J4", c.near(c.m({"J2", "L1"}))},
                 {"J5", c.near(c.m({"L2", "L3", "L4"}))},
                 {"J6", all}});
  const Mask j1 = c.m({"J1"}), lp = c.m({"L'"});
  c.family("L", {{"L1", c.near(c.m({"K"}))},
                 {"L2", c.near(c.m({"L1", "M1"}))},
                 {"L3", [&](VertexId w, const Mask&) { return has_neighbor_in(g, w, j1) && has_neighbor_in(g, w, lp); }},
                 {"L4", all}});
  std::vector<Child> a{{"A1", c.near(c.m({"B"}))}, {"A2", c.near(s22)}, {"A3", c.near(c.m({"A1"}))}};
  for (int j = 1; j <= 5; ++j) a.push_back({"A" + std::to_string(3 + j), c.near(c.named({"I" + std::to_string(j)}))});
  a.push_back({"A9", all});
  c.family("A", a);
  std::vector<Child> b{{"B1", c.near(c.m({"A"}))}, {"B2", c.near(s22)}, {"B3", c.near(c.m({"B1"}))}};
  for (int j = 1; j <= 6; ++j) b.push_back({"B" + std::to_string(3 + j), c.near(c.named({"J" + std::to_string(j)}))});
  b.push_back({"B10", all});
  c.family("B", b);
  c.family("B10", {{"B10(1)", c.isolated()}, {"B10(2)", all}});
  c.family("I6", {{"I61", c.near(c.range("A", 1, 3))}, {"I62", all}});
  c.family("I61", {{"I61(1)", c.near(c.m({"I62"}))}, {"I61(2)", c.isolated()}, {"I61(3)", all}});

  const Mask ij = c.m({"I", "J"}), km1 = c.m({"K", "M1"});
  c.family("X", {{"X(i)", [&](VertexId w, const Mask&) { return edges_into(g, w, s22) != 1 || has_neighbor_in(g, w, ij); }},
                 {"X(ii)", c.near(km1)},
                 {"X(iii)", all}});

  // L' by distance to K'
  const auto dk = distance_to_set(g, c.m({"K'"}));
  auto dist_is = [&dk](int d) { return [&dk, d](VertexId w, const Mask&) { return dk[static_cast<std::size_t>(w)] == d; }; };
  const Mask l4 = c.m({"L4"}), x = c.m({"X"}), low = c.m({"I1", "I2", "K1"});
  // w i1 i2 i3 i4 with the cells pinned and d(., K') strictly decreasing
  auto l2_path = [&](VertexId w, const Mask&) {
    if (dk[static_cast<std::size_t>(w)] != 4) return false;
    for (VertexId i1 : g.neighbors(w)) {
      if (!l4[static_cast<std::size_t>(i1)] || dk[static_cast<std::size_t>(i1)] != 3) continue;
      for (VertexId i2 : g.neighbors(i1)) {
        if (!x[static_cast<std::size_t>(i2)] || dk[static_cast<std::size_t>(i2)] != 2) continue;
        for (VertexId i3 : g.neighbors(i2))
          if (low[static_cast<std::size_t>(i3)] && dk[static_cast<std::size_t>(i3)] == 1) return true;
      }
    }
    return false;
  };
  c.family("L'", {{"L'1", c.near(c.m({"L1", "L2", "L3"}))},
                  {"L'2", l2_path},
                  {"L'3", c.isolated()},
                  {"L'4", dist_is(3)},
                  {"L'5", dist_is(4)}});
  c.family("L'1", {{"L'11", c.near(c.m({"L1", "L3"}))}, {"L'12", c.near(c.m({"J1"}))}, {"L'13", all}});
  c.family("L'4", {{"L'41", c.near(c.m({"L'5"}))}, {"L'42", c.isolated()}, {"L'43", all}});
  const Mask j6 = c.m({"J6"});
  c.family("L'5", {{"L'51", c.near(c.m({"L'4"}))},
                   {"L'52", [&](VertexId w, const Mask& rest) { return isolated_in(g, w, rest) || has_neighbor_in(g, w, j6); }},
                   {"L'53", c.isolated()},
                   {"L'54", all}});
  for (VertexId w : c.L_.members("L'")) {
    const int d = dk[static_cast<std::size_t>(w)];
    c.fact(d == 3 || d == 4, "vertex " + std::to_string(w) + " in L' has d(w,K')=" + format_distance(d));
  }
}

void check_staged(Checker& c, const MultiGraph& g, const Partition& p) {
  if (p.checkpoints.size() != 4) {
    c.fail("checkpoint snapshots missing");
    return;
  }
  Mask in_d[4];
  for (int k = 0; k < 4; ++k) in_d[k] = to_mask(g.vertex_count(), p.checkpoints[static_cast<std::size_t>(k)].directed_vertices());
  const auto all = Checker::any();

  c.family("M3", {{"M31", c.member(in_d[0])}, {"M32", all}});
  c.family("M'", {{"M'1", c.member(in_d[0])}, {"M'2", all}});
  c.family("M'2", {{"M'21", c.near(c.m({"M"}))}, {"M'22", c.isolated()}, {"M'23", all}});

  const Mask b16 = c.range("B", 1, 6);
  c.family("B'", {{"B'1", c.member(in_d[1])}, {"B'2", c.isolated()}, {"B'3", all}});
  c.family("J'", {{"J'1", c.member(in_d[1])},
                  {"J'2", c.near(c.range("J", 1, 3))},
                  {"J'3", c.near(c.range("J", 4, 6))},
                  {"J'4", c.isolated()},
                  {"J'5", c.near(b16)},
                  {"J'6", c.near(c.range("B", 7, 10))}});
  c.family("J'3", {{"J'31", c.near(b16)}, {"J'32", all}});
  c.family("J'4", {{"J'41", c.near(b16)}, {"J'42", all}});
  c.family("J'5", {{"J'51", c.near(c.m({"J'6"}))}, {"J'52", c.isolated()}, {"J'53", all}});
  c.family("J'6", {{"J'61", c.near(c.m({"J'5"}))}, {"J'62", c.isolated()}, {"J'63", all}});

  const MixedOrientation& d3 = p.checkpoints[2];
  const Mask a = c.m({"A"});
  c.family("I61(2)", {{"I61(21)",
                       [&](VertexId w, const Mask&) {
                         for (const auto& inc : g.incident(w))
                           if (a[static_cast<std::size_t>(inc.neighbor)] && d3.is_directed(inc.edge) && d3.head(inc.edge) == w)
                             return true;
                         return false;
                       }},
                      {"I61(22)", all}});
  const Mask i623 = c.m({"I62(3)"});
  c.family("I'", {{"I'1", c.member(in_d[2])},
                  {"I'2", c.near(minus(c.m({"I61"}), c.m({"I61(22)"})))},
                  {"I'3", c.member(in_d[3])},
                  {"I'4", c.near(minus(c.m({"I"}), i623))},
                  {"I'5", c.near(i623)},
                  {"I'6", c.isolated()},
                  {"I'7", c.near(c.range("A", 1, 4))},
                  {"I'8", c.near(c.range("A", 5, 9))}});
  c.family("I62", {{"I62(1)", c.near(c.m({"I61"}))}, {"I62(2)", c.member(in_d[2])}, {"I62(3)", all}});
  c.family("A9", {{"A91", c.near(c.m({"I'1"}))},
                  {"A92", c.near(c.m({"I'2"}))},
                  {"A93", c.near(c.m({"I61", "I62(1)", "I62(2)"}))},
                  {"A94", c.isolated()},
                  {"A95", all}});

  c.family("A'", {{"A'1", c.member(in_d[3])}, {"A'2", c.isolated()}, {"A'3", all}});
  const Mask a16 = c.range("A", 1, 6);
  for (const char* cell : {"I'4", "I'5", "I'6"})
    c.family(cell, {{std::string(cell) + "1", c.near(a16)}, {std::string(cell) + "2", all}});
  c.family("I'7", {{"I'71", c.near(c.m({"I'8"}))}, {"I'72", c.isolated()}, {"I'73", all}});
  c.family("I'8", {{"I'81", c.near(c.m({"I'7"}))}, {"I'82", c.isolated()}, {"I'83", all}});
  c.family("I62(3)", {{"I62(31)", c.member(in_d[3])},
                      {"I62(32)", c.near(c.m({"I'1", "I'2", "I'3", "I'41", "I'51", "I1", "I2", "I3", "I4", "I5"}))},
                      {"I62(33)", all}});

  const auto db = distance_to_set(g, c.m({"B"}));
  const Mask i_low = minus(c.m({"I"}), i623), i_mid = c.m({"I62(31)", "I62(32)"}), i_top = c.m({"I62(33)"});
  auto both = [&](const Mask& x, const Mask& y) {
    return [&g, x, y](VertexId w, const Mask&) { return has_neighbor_in(g, w, x) && has_neighbor_in(g, w, y); };
  };
  c.family("K'", {{"K'1", c.member(in_d[2])},
                  {"K'2", [&](VertexId w, const Mask&) { return db[static_cast<std::size_t>(w)] == 3; }},
                  {"K'3", c.near(c.m({"K'1", "K'2"}))},
                  {"K'4", c.near(c.m({"K"}))},
                  {"K'5", both(i_low, i_top)},
                  {"K'6", both(i_mid, i_top)},
                  {"K'7", c.isolated()},
                  {"K'8", c.near(i_low)},
                  {"K'9", c.near(i_mid)},
                  {"K'10", c.near(i_top)}});
  c.family("K'2", {{"K'21", c.near(c.m({"K'3"}))}, {"K'22", c.isolated()}, {"K'23", all}});
  c.family("K'8", {{"K'81", c.near(c.m({"K'9"}))}, {"K'82", c.isolated()}, {"K'83", all}});
  c.family("K'9", {{"K'91", c.near(c.m({"K'8"}))}, {"K'92", c.isolated()}, {"K'93", all}});

  // facts about K' and I*
  c.fact(c.L_.empty("K'10"), "K'10 is not empty");
  if (p.base.gstar == 5) c.fact(c.L_.empty("K'6") && c.L_.empty("K'9"), "K'6 or K'9 is not empty although g*=5");
  const Mask istar = to_mask(g.vertex_count(), c.L_.istar);
  const Mask i_not_62 = minus(c.m({"I"}), c.m({"I62"}));
  for (VertexId w : c.L_.istar) c.fact(i_not_62[static_cast<std::size_t>(w)] != 0, "I* member " + std::to_string(w) + " lies outside I-I62");
  for (VertexId w : c.L_.members("K'2"))
    c.fact(has_neighbor_in(g, w, istar), "K'2 vertex " + std::to_string(w) + " has no neighbour in I*");
}

void check_facts(Checker& c, const MultiGraph& g) {
  const Mask s22 = c.layer(2, 2), s33 = c.layer(3, 3);
  const Mask K = c.m({"K"}), L = c.m({"L"}), I = c.m({"I"}), J = c.m({"J"});
  for (VertexId w : from_mask(c.layer(4, 4)))
    if (!has_neighbor_in(g, w, s33))
      c.fact(has_neighbor_in(g, w, K) && has_neighbor_in(g, w, L), "S44 vertex " + std::to_string(w) + " breaks the K/L neighbour rule");
  for (VertexId w : c.L_.members("M'"))
    c.fact(edges_into(g, w, s33) == 1 && !has_neighbor_in(g, w, unite(K, L)), "M' vertex " + std::to_string(w) + " breaks its neighbourhood rule");
  for (VertexId w : from_mask(s33))
    if (!has_neighbor_in(g, w, s22))
      c.fact(has_neighbor_in(g, w, I) && has_neighbor_in(g, w, J), "S33 vertex " + std::to_string(w) + " breaks the I/J neighbour rule");
  const Mask ijkl = c.m({"I", "J", "K", "L"});
  for (VertexId w : c.L_.members("X'"))
    c.fact(edges_into(g, w, s22) == 1 && !has_neighbor_in(g, w, ijkl), "X' vertex " + std::to_string(w) + " breaks its neighbourhood rule");
  const Mask x13 = c.m({"X'1", "X'2", "X'3"}), mm3 = c.m({"M'", "M3"});
  for (VertexId w : c.L_.members("X'4"))
    if (!has_neighbor_in(g, w, x13))
      c.fact(has_neighbor_in(g, w, s22) && has_neighbor_in(g, w, mm3), "X'4 vertex " + std::to_string(w) + " lacks an S22 or M'/M3 neighbour");

  struct Row {
    const char* cell;
    Mask w1, w2;
  };
  const Row rows[] = {
      {"A9", unite(c.m({"B"}), c.range("I", 1, 5)), c.m({"I6", "I'"})},
      {"B10", c.m({"A", "J"}), c.m({"J'"})},
      {"I6", unite(c.m({"J", "K"}), s33), c.m({"K'"})},
      {"J6", unite(c.m({"I", "L"}), s33), c.m({"L'"})},
      {"K3", unite(s33, L), c.m({"M1"})},
      {"L4", K, unite(s33, c.m({"M"}))},
  };
  for (const auto& row : rows)
    for (VertexId w : c.L_.members(row.cell))
      c.fact(!has_neighbor_in(g, w, s22) && !has_neighbor_in(g, w, row.w1) && has_neighbor_in(g, w, row.w2),
             std::string(row.cell) + " vertex " + std::to_string(w) + " breaks its neighbourhood table row");
}

}  // namespace

std::vector<std::string> check_partition(const MultiGraph& g, const Partition& p, bool staged_complete) {
  Checker c(g, p);
  check_layers(c, g, p);
  check_coarse(c, g);
  check_static(c, g);
  check_facts(c, g);
  if (staged_complete) check_staged(c, g, p);
  for (const auto& a : p.labels.anomalies) c.fail(a);
  return c.out;
}

}  // namespace orient4

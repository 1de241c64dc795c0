#include "harmonica/families.hpp"

#include <map>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

using NameMap = std::map<std::string, std::string>;

// Automorphism given by name substitutions; unlisted names are fixed.
Automorphism from_names(const MultiGraph& g, const NameMap& vmap, const NameMap& emap) {
  std::vector<VertexId> vp;
  for (VertexId v : g.vertices()) {
    auto it = vmap.find(g.name(v));
    vp.push_back(it == vmap.end() ? v : g.vertex(it->second));
  }
  std::vector<EdgeId> ep;
  for (EdgeId e : g.edges()) {
    auto it = emap.find(g.name(e));
    ep.push_back(it == emap.end() ? e : g.edge(it->second));
  }
  return Automorphism(g, std::move(vp), std::move(ep));
}

// Adds both directions of each pair.
NameMap swaps(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  NameMap m;
  for (auto [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

FamilyInstance finish(std::string name, MultiGraph g, std::vector<NamedAutomorphism> named,
                      std::size_t order, int genus, int quotient_genus,
                      std::vector<BranchShape> shapes) {
  std::vector<Automorphism> gens;
  for (const auto& n : named) gens.push_back(n.element);
  ActionGroup group = generate_group(g, gens);
  FamilyInstance f{std::move(name), g, std::move(group), true,
                   summary_profile(order, genus, quotient_genus, shapes), std::move(named)};
  return f;
}

// Non-root vertices of a tree in index order get ranks 0, 1, ...
std::vector<std::uint32_t> nonroot_rank(const RootedTree& t) {
  std::vector<std::uint32_t> rank(t.tree.vertex_count(), 0);
  std::uint32_t next = 0;
  for (VertexId v : t.tree.vertices())
    if (v != t.root) rank[v.index] = next++;
  return rank;
}

void require_edge(const RootedTree& t, const char* who) {
  if (t.tree.edge_count() == 0)
    throw Error(Errc::DegenerateTree, std::string(who) + ": the tree needs at least one edge");
}

}  // namespace

RootedTree RootedTree::make(MultiGraph tree, VertexId root) {
  if (root.index >= tree.vertex_count()) throw Error(Errc::BadTree, "root is not a vertex of the tree");
  if (!is_connected(tree) || genus(tree) != 0) throw Error(Errc::BadTree, "graph is not a tree");
  return RootedTree{std::move(tree), root};
}

RootedTree RootedTree::single_vertex() {
  GraphBuilder b;
  VertexId r = b.add_vertex("r");
  return make(b.build(), r);
}

RootedTree RootedTree::single_edge() { return path(1); }

RootedTree RootedTree::path(std::size_t edges) {
  GraphBuilder b;
  VertexId prev = b.add_vertex("p0");
  for (std::size_t i = 1; i <= edges; ++i) {
    VertexId next = b.add_vertex("p" + std::to_string(i));
    b.add_edge("q" + std::to_string(i), prev, next);
    prev = next;
  }
  return make(b.build(), VertexId{0});
}

RootedTree RootedTree::star(std::size_t leaves) {
  GraphBuilder b;
  VertexId r = b.add_vertex("r");
  for (std::size_t i = 0; i < leaves; ++i)
    b.add_edge("s" + std::to_string(i), r, b.add_vertex("x" + std::to_string(i)));
  return make(b.build(), r);
}

GroupTable GroupTable::make(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = labels.size();
  auto bad = [](const std::string& why) { return Error(Errc::InvalidGroupTable, why); };
  if (n == 0) throw bad("empty group");
  if (table.size() != n) throw bad("table must be n x n");
  for (const auto& row : table) {
    if (row.size() != n) throw bad("table must be n x n");
    for (std::size_t x : row)
      if (x >= n) throw bad("entry outside the group");
  }
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  if (id == n) throw bad("no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == id && table[b][a] == id) has_inverse = true;
    if (!has_inverse) throw bad("element '" + labels[a] + "' has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw bad("multiplication is not associative");
  return GroupTable{std::move(labels), std::move(table), id};
}

GroupTable GroupTable::cyclic(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return make(std::move(labels), std::move(t));
}

GroupTable GroupTable::klein_four() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return make({"e", "a", "b", "ab"}, std::move(t));
}

GroupTable GroupTable::dihedral(std::size_t n) {
  // r^i s^j encoded as i + n*j.
  std::vector<std::string> labels;
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, j = x / n;
    labels.push_back((j ? "sr" : "r") + std::to_string(i));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, l = y / n;
      // r^i s^j r^k s^l = r^(i ± k) s^(j+l)
      const std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
      t[x][y] = rot + n * ((j + l) % 2);
    }
  }
  return make(std::move(labels), std::move(t));
}

const Automorphism& FamilyInstance::automorphism(const std::string& which) const {
  for (const auto& n : named)
    if (n.name == which) return n.element;
  throw Error(Errc::InvalidArgument, "family '" + name + "' has no automorphism named '" + which + "'");
}

Barbell barbell() {
  const std::vector<std::string> v{"a", "b", "c", "d"};
  const std::vector<EdgeSpec> e{{"ab1", "a", "b"}, {"ab2", "a", "b"}, {"bc", "b", "c"},
                                {"cd1", "c", "d"}, {"cd2", "c", "d"}};
  MultiGraph g = build_graph(v, e);
  auto h = from_names(g, {}, swaps({{"ab1", "ab2"}, {"cd1", "cd2"}}));
  auto vr = from_names(g, swaps({{"a", "d"}, {"b", "c"}}), swaps({{"ab1", "cd1"}, {"ab2", "cd2"}}));
  auto rot = from_names(g, swaps({{"a", "d"}, {"b", "c"}}), swaps({{"ab1", "cd2"}, {"ab2", "cd1"}}));
  return Barbell{g, h, vr, rot};
}

FamilyInstance klein_genus3() {
  const std::vector<std::string> v{"u1", "u2", "u3", "u4", "l1", "l2", "l3", "l4"};
  const std::vector<EdgeSpec> e{
      {"u12", "u1", "u2"}, {"u23", "u2", "u3"}, {"u34", "u3", "u4"}, {"u41", "u4", "u1"},
      {"l12", "l1", "l2"}, {"l23", "l2", "l3"}, {"l34", "l3", "l4"}, {"l41", "l4", "l1"},
      {"x1", "u1", "l1"},  {"x3", "u3", "l3"}};
  MultiGraph g = build_graph(v, e);
  auto rho = from_names(g, swaps({{"u1", "l3"}, {"u2", "l4"}, {"u3", "l1"}, {"u4", "l2"}}),
                        swaps({{"u12", "l34"}, {"u23", "l41"}, {"u34", "l12"}, {"u41", "l23"}, {"x1", "x3"}}));
  auto swap = from_names(g, swaps({{"u1", "l1"}, {"u2", "l2"}, {"u3", "l3"}, {"u4", "l4"}}),
                         swaps({{"u12", "l12"}, {"u23", "l23"}, {"u34", "l34"}, {"u41", "l41"}}));
  return finish("klein_genus3", g, {{"rotation", rho}, {"swap", swap}}, 4, 3, 1, {{1, 1}});
}

FamilyInstance klein_genus5() {
  const std::vector<std::string> v{"1a", "1b", "3a", "3b", "2", "4"};
  const std::vector<EdgeSpec> e{
      {"p1a0", "1a", "2"}, {"p1a1", "1a", "2"}, {"p1b0", "1b", "2"}, {"p1b1", "1b", "2"},
      {"p3a0", "3a", "4"}, {"p3a1", "3a", "4"}, {"p3b0", "3b", "4"}, {"p3b1", "3b", "4"},
      {"v0", "2", "4"},    {"v1", "2", "4"}};
  MultiGraph g = build_graph(v, e);
  auto a = from_names(g, swaps({{"1a", "3b"}, {"1b", "3a"}, {"2", "4"}}),
                      swaps({{"p1a0", "p3b1"}, {"p1a1", "p3b0"}, {"p1b0", "p3a1"}, {"p1b1", "p3a0"}}));
  auto b = from_names(g, swaps({{"1a", "1b"}, {"3a", "3b"}}),
                      swaps({{"p1a0", "p1b0"}, {"p1a1", "p1b1"}, {"p3a0", "p3b0"}, {"p3a1", "p3b1"},
                             {"v0", "v1"}}));
  return finish("klein_genus5", g, {{"a", a}, {"b", b}}, 4, 5, 1, {{2, 1}});
}

FamilyInstance decorated_cycle(std::size_t n, const RootedTree& t) {
  if (n < 3) throw Error(Errc::InvalidArgument, "decorated_cycle needs n >= 3");
  require_edge(t, "decorated_cycle");
  const MultiGraph& tree = t.tree;
  const auto rank = nonroot_rank(t);
  const std::uint32_t tv = static_cast<std::uint32_t>(tree.vertex_count() - 1);
  const std::uint32_t te = static_cast<std::uint32_t>(tree.edge_count());
  const std::uint32_t nn = static_cast<std::uint32_t>(n);

  auto vid = [&](std::uint32_t i, std::uint32_t s, VertexId x) {
    return x == t.root ? VertexId{i} : VertexId{nn + (2 * i + s) * tv + rank[x.index]};
  };
  auto eid = [&](std::uint32_t i, std::uint32_t s, EdgeId f) { return EdgeId{nn + (2 * i + s) * te + f.index}; };

  GraphBuilder b;
  for (std::uint32_t i = 0; i < nn; ++i) b.add_vertex("c" + std::to_string(i));
  for (std::uint32_t i = 0; i < nn; ++i)
    for (std::uint32_t s = 0; s < 2; ++s)
      for (VertexId x : tree.vertices())
        if (x != t.root)
          b.add_vertex("c" + std::to_string(i) + "." + std::to_string(s) + "." + tree.name(x));
  for (std::uint32_t i = 0; i < nn; ++i) b.add_edge("e" + std::to_string(i), VertexId{i}, VertexId{(i + 1) % nn});
  for (std::uint32_t i = 0; i < nn; ++i)
    for (std::uint32_t s = 0; s < 2; ++s)
      for (EdgeId f : tree.edges()) {
        auto [x, y] = tree.ends(f);
        b.add_edge("c" + std::to_string(i) + "." + std::to_string(s) + "." + tree.name(f), vid(i, s, x),
                   vid(i, s, y));
      }
  MultiGraph g = b.build();

  // Cycle map i -> k + sign*i; reflections also swap the two copies.
  auto dihedral = [&](std::uint32_t k, bool reflect) {
    std::vector<VertexId> vp(g.vertex_count());
    std::vector<EdgeId> ep(g.edge_count());
    auto img = [&](std::uint32_t i) { return reflect ? (k + nn - i) % nn : (k + i) % nn; };
    for (std::uint32_t i = 0; i < nn; ++i) {
      const std::uint32_t j = img(i);
      // e_i joins c_i, c_{i+1}; a reflection sends it to the edge joining c_j, c_{j-1}.
      ep[i] = EdgeId{reflect ? (j + nn - 1) % nn : j};
      for (std::uint32_t s = 0; s < 2; ++s) {
        const std::uint32_t s2 = reflect ? 1 - s : s;
        for (VertexId x : tree.vertices()) vp[vid(i, s, x).index] = vid(j, s2, x);
        for (EdgeId f : tree.edges()) ep[eid(i, s, f).index] = eid(j, s2, f);
      }
    }
    return Automorphism(g, std::move(vp), std::move(ep));
  };
  return finish("decorated_cycle", g,
                {{"rotation", dihedral(1, false)},
                 {"reflection_vertex", dihedral(0, true)},
                 {"reflection_edge", dihedral(1, true)}},
                2 * n, 1, 0, {{2, 1}});
}

FamilyInstance tree_double(const RootedTree& t0) {
  require_edge(t0, "tree_double");
  const MultiGraph& tree = t0.tree;
  const std::uint32_t nv = static_cast<std::uint32_t>(tree.vertex_count());
  const std::uint32_t ne = static_cast<std::uint32_t>(tree.edge_count());
  GraphBuilder b;
  for (const char* side : {"a.", "b."})
    for (VertexId x : tree.vertices()) b.add_vertex(side + tree.name(x));
  for (std::uint32_t s = 0; s < 2; ++s)
    for (EdgeId f : tree.edges()) {
      auto [x, y] = tree.ends(f);
      b.add_edge((s ? "b." : "a.") + tree.name(f), VertexId{s * nv + x.index}, VertexId{s * nv + y.index});
    }
  b.add_edge("bridge", t0.root, VertexId{nv + t0.root.index});
  MultiGraph g = b.build();
  std::vector<VertexId> vp(g.vertex_count());
  std::vector<EdgeId> ep(g.edge_count());
  for (std::uint32_t x = 0; x < nv; ++x) {
    vp[x] = VertexId{x + nv};
    vp[x + nv] = VertexId{x};
  }
  for (std::uint32_t f = 0; f < ne; ++f) {
    ep[f] = EdgeId{f + ne};
    ep[f + ne] = EdgeId{f};
  }
  ep[2 * ne] = EdgeId{2 * ne};
  return finish("tree_double", g, {{"swap", Automorphism(g, std::move(vp), std::move(ep))}}, 2, 0, 0,
                {{1, 1}});
}

FamilyInstance tree_star(const RootedTree& t0, const GroupTable& group) {
  require_edge(t0, "tree_star");
  const std::size_t k = group.order();
  if (k < 2) throw Error(Errc::DegenerateTree, "tree_star: the group must have order >= 2");
  const MultiGraph& tree = t0.tree;
  const auto rank = nonroot_rank(t0);
  const std::uint32_t tv = static_cast<std::uint32_t>(tree.vertex_count() - 1);
  const std::uint32_t te = static_cast<std::uint32_t>(tree.edge_count());
  auto vid = [&](std::size_t h, VertexId x) {
    return x == t0.root ? VertexId{0} : VertexId{1 + static_cast<std::uint32_t>(h) * tv + rank[x.index]};
  };
  GraphBuilder b;
  b.add_vertex("z");
  for (std::size_t h = 0; h < k; ++h)
    for (VertexId x : tree.vertices())
      if (x != t0.root) b.add_vertex(group.labels[h] + "." + tree.name(x));
  for (std::size_t h = 0; h < k; ++h)
    for (EdgeId f : tree.edges()) {
      auto [x, y] = tree.ends(f);
      b.add_edge(group.labels[h] + "." + tree.name(f), vid(h, x), vid(h, y));
    }
  MultiGraph g = b.build();

  std::vector<NamedAutomorphism> named;
  for (std::size_t a = 0; a < k; ++a) {
    if (a == group.identity) continue;
    std::vector<VertexId> vp(g.vertex_count());
    std::vector<EdgeId> ep(g.edge_count());
    for (std::size_t h = 0; h < k; ++h) {
      const std::size_t ah = group.table[a][h];
      for (VertexId x : tree.vertices()) vp[vid(h, x).index] = vid(ah, x);
      for (EdgeId f : tree.edges())
        ep[h * te + f.index] = EdgeId{static_cast<std::uint32_t>(ah * te + f.index)};
    }
    named.push_back({group.labels[a], Automorphism(g, std::move(vp), std::move(ep))});
  }
  return finish("tree_star", g, std::move(named), k, 0, 0, {{k, 0}});
}

FamilyInstance hurwitz_genus2() {
  const std::vector<std::string> v{"CL", "CR", "L1", "L2", "L3", "R1", "R2", "R3"};
  const std::vector<EdgeSpec> e{{"m1", "CL", "CR"}, {"m2", "CL", "CR"}, {"m3", "CL", "CR"},
                                {"l1", "CL", "L1"}, {"l2", "CL", "L2"}, {"l3", "CL", "L3"},
                                {"r1", "CR", "R1"}, {"r2", "CR", "R2"}, {"r3", "CR", "R3"}};
  MultiGraph g = build_graph(v, e);
  NameMap sv, se;
  for (const char* p : {"L", "R"})
    for (int i = 1; i <= 3; ++i) sv[p + std::to_string(i)] = p + std::to_string(i % 3 + 1);
  for (const char* p : {"m", "l", "r"})
    for (int i = 1; i <= 3; ++i) se[p + std::to_string(i)] = p + std::to_string(i % 3 + 1);
  auto sigma = from_names(g, sv, se);
  auto tau = from_names(g, swaps({{"CL", "CR"}, {"L1", "R1"}, {"L2", "R2"}, {"L3", "R3"}}),
                        swaps({{"l1", "r1"}, {"l2", "r2"}, {"l3", "r3"}}));
  return finish("hurwitz_genus2", g, {{"sigma", sigma}, {"tau", tau}}, 6, 2, 0, {{3, 1}});
}

FamilyInstance lower_bound_family(int genus_g) {
  if (genus_g < 3) throw Error(Errc::InvalidArgument, "lower_bound_family needs g >= 3");
  const std::uint32_t n = static_cast<std::uint32_t>(genus_g - 1);
  // Corners c_i = i, tops t_i = n + i, bottoms b_i = 2n + i. Square i spans
  // c_i and c_{i+1}; its edges are 4i + {ct, tc', c'b, bc}.
  GraphBuilder b;
  for (const char* p : {"c", "t", "b"})
    for (std::uint32_t i = 0; i < n; ++i) b.add_vertex(p + std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::string s = std::to_string(i);
    const VertexId c{i}, c1{(i + 1) % n}, t{n + i}, bo{2 * n + i};
    b.add_edge("ct" + s, c, t);
    b.add_edge("tc" + s, t, c1);
    b.add_edge("cb" + s, c1, bo);
    b.add_edge("bc" + s, bo, c);
  }
  MultiGraph g = b.build();

  auto make = [&](auto corner, auto square, bool reverse, bool flip) {
    std::vector<VertexId> vp(g.vertex_count());
    std::vector<EdgeId> ep(g.edge_count());
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t j = square(i);
      vp[i] = VertexId{corner(i)};
      vp[n + i] = VertexId{(flip ? 2 * n : n) + j};
      vp[2 * n + i] = VertexId{(flip ? n : 2 * n) + j};
      // Local edge slots: 0 = c-t, 1 = t-c', 2 = c'-b, 3 = b-c.
      std::uint32_t slot[4] = {0, 1, 2, 3};
      if (reverse) std::swap(slot[0], slot[1]), std::swap(slot[2], slot[3]);
      if (flip) {
        // t <-> b: c-t <-> b-c and t-c' <-> c'-b
        for (auto& s : slot) s = 3 - s;
      }
      for (std::uint32_t k = 0; k < 4; ++k) ep[4 * i + k] = EdgeId{4 * j + slot[k]};
    }
    return Automorphism(g, std::move(vp), std::move(ep));
  };
  auto rho = make([&](std::uint32_t i) { return (i + 1) % n; }, [&](std::uint32_t i) { return (i + 1) % n; },
                  false, false);
  auto mu = make([&](std::uint32_t i) { return (n - i) % n; }, [&](std::uint32_t i) { return (2 * n - i - 1) % n; },
                 true, false);
  auto tau = make([](std::uint32_t i) { return i; }, [](std::uint32_t i) { return i; }, false, true);
  const std::size_t order = 4 * static_cast<std::size_t>(n);
  return finish("lower_bound_family", g, {{"rotation", rho}, {"reflection", mu}, {"flip", tau}}, order,
                genus_g, 0, {{4, 0}, {2, 0}});
}

}  // namespace harmonica

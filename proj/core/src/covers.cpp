#include "harmonica/covers.hpp"

#include <algorithm>
#include <limits>

#include "harmonica/error.hpp"
#include "harmonica/families.hpp"

namespace harmonica {

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m < 2) throw Error(Errc::InvalidArgument, "abelian group moduli must be >= 2");
    if (order_ > std::numeric_limits<std::uint32_t>::max() / m)
      throw Error(Errc::InvalidArgument, "abelian group too large");
    order_ *= m;
  }
}

AbelianGroup AbelianGroup::power(std::uint32_t m, std::size_t rank) {
  return AbelianGroup(std::vector<std::uint32_t>(rank, m));
}

std::vector<std::uint32_t> AbelianGroup::coordinates(std::uint32_t a) const {
  std::vector<std::uint32_t> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = a % moduli_[i];
    a /= moduli_[i];
  }
  return c;
}

std::uint32_t AbelianGroup::element(std::span<const std::uint32_t> coords) const {
  if (coords.size() != moduli_.size()) throw Error(Errc::InvalidArgument, "wrong number of coordinates");
  std::uint32_t a = 0, stride = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    a += (coords[i] % moduli_[i]) * stride;
    stride *= moduli_[i];
  }
  return a;
}

std::uint32_t AbelianGroup::basis(std::size_t i) const {
  if (i >= moduli_.size()) throw Error(Errc::InvalidArgument, "basis index out of range");
  std::uint32_t stride = 1;
  for (std::size_t k = 0; k < i; ++k) stride *= moduli_[k];
  return stride;
}

std::uint32_t AbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, stride = 1;
  for (auto m : moduli_) {
    out += ((a % m + b % m) % m) * stride;
    a /= m;
    b /= m;
    stride *= m;
  }
  return out;
}

std::uint32_t AbelianGroup::negate(std::uint32_t a) const {
  std::uint32_t out = 0, stride = 1;
  for (auto m : moduli_) {
    out += ((m - a % m) % m) * stride;
    a /= m;
    stride *= m;
  }
  return out;
}

std::string AbelianGroup::label(std::uint32_t a) const {
  if (moduli_.empty()) return "0";
  std::string s;
  for (auto c : coordinates(a)) {
    if (!s.empty()) s += '.';
    s += std::to_string(c);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Voltage assignments

VertexId VoltageAssignment::tail(EdgeId e) const {
  auto [u, v] = base.ends(e);
  return std::min(u, v);
}

VertexId VoltageAssignment::head(EdgeId e) const {
  auto [u, v] = base.ends(e);
  return std::max(u, v);
}

std::vector<EdgeId> VoltageAssignment::cotree() const {
  std::vector<EdgeId> out;
  for (EdgeId e : base.edges())
    if (!std::binary_search(tree.begin(), tree.end(), e)) out.push_back(e);
  return out;
}

std::vector<EdgeId> spanning_tree(const MultiGraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "spanning_tree: graph is disconnected");
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> queue{VertexId{0}};
  seen[0] = true;
  std::vector<EdgeId> tree;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (EdgeId e : g.incident_edges(x)) {
      VertexId y = g.opposite(e, x);
      if (seen[y.index]) continue;
      seen[y.index] = true;
      tree.push_back(e);
      queue.push_back(y);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace {

void check_tree(const MultiGraph& g, std::vector<EdgeId>& tree) {
  std::sort(tree.begin(), tree.end());
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end())
    throw Error(Errc::BadTree, "tree lists an edge twice");
  if (tree.size() + 1 != g.vertex_count())
    throw Error(Errc::BadTree, "tree must have |V| - 1 edges");
  // Union-find: |V| - 1 edges without a cycle span the graph.
  std::vector<std::uint32_t> parent(g.vertex_count());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : tree) {
    if (e.index >= g.edge_count()) throw Error(Errc::BadTree, "tree edge outside the graph");
    auto [u, v] = g.ends(e);
    auto a = find(u.index), b = find(v.index);
    if (a == b) throw Error(Errc::BadTree, "tree contains a cycle");
    parent[a] = b;
  }
}

}  // namespace

VoltageAssignment make_voltage_assignment(const MultiGraph& base, std::vector<EdgeId> tree,
                                          AbelianGroup group, std::vector<std::uint32_t> voltage) {
  check_tree(base, tree);
  if (voltage.size() != base.edge_count())
    throw Error(Errc::InvalidArgument, "one voltage per edge is required");
  for (auto a : voltage)
    if (a >= group.order()) throw Error(Errc::InvalidArgument, "voltage outside the group");
  for (EdgeId e : tree)
    if (voltage[e.index] != 0)
      throw Error(Errc::InvalidArgument, "tree edge '" + base.name(e) + "' has nonzero voltage");
  return VoltageAssignment{base, std::move(tree), std::move(group), std::move(voltage)};
}

VoltageAssignment homology_voltages(const MultiGraph& g, std::vector<EdgeId> tree, std::uint32_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "homology voltages need m >= 2");
  check_tree(g, tree);
  VoltageAssignment va{g, std::move(tree), {}, std::vector<std::uint32_t>(g.edge_count(), 0)};
  const auto cot = va.cotree();
  va.group = AbelianGroup::power(m, cot.size());
  for (std::size_t i = 0; i < cot.size(); ++i) va.voltage[cot[i].index] = va.group.basis(i);
  return va;
}

// ---------------------------------------------------------------------------
// Derived covers

VertexId DerivedCover::lift(VertexId v, std::uint32_t a) const {
  return VertexId{static_cast<std::uint32_t>(v.index * voltages.group.order() + a)};
}

EdgeId DerivedCover::lift(EdgeId e, std::uint32_t a) const {
  return EdgeId{static_cast<std::uint32_t>(e.index * voltages.group.order() + a)};
}

DerivedCover derived_cover(const VoltageAssignment& va) {
  const MultiGraph& base = va.base;
  const AbelianGroup& grp = va.group;
  const auto n = static_cast<std::uint32_t>(grp.order());
  GraphBuilder b;
  for (VertexId v : base.vertices())
    for (std::uint32_t a = 0; a < n; ++a) b.add_vertex(base.name(v) + "@" + grp.label(a));
  for (EdgeId e : base.edges()) {
    const VertexId t = va.tail(e), h = va.head(e);
    for (std::uint32_t a = 0; a < n; ++a)
      b.add_edge(base.name(e) + "@" + grp.label(a), VertexId{t.index * n + a},
                 VertexId{h.index * n + grp.add(a, va.voltage[e.index])});
  }
  MultiGraph cover = b.build();
  if (!is_connected(cover))
    throw Error(Errc::DisconnectedCover, "voltages do not generate the group; the cover is disconnected");
  if (genus(cover) - 1 != static_cast<int>(n) * (genus(base) - 1))
    throw TheoremViolation(Theorem::CoverGenusIdentity, "cover genus disagrees with |A|(g - 1) + 1");

  std::vector<VertexId> vmap;
  vmap.reserve(cover.vertex_count());
  for (VertexId v : base.vertices())
    for (std::uint32_t a = 0; a < n; ++a) vmap.push_back(v);
  std::vector<EdgeImage> emap;
  emap.reserve(cover.edge_count());
  for (EdgeId e : base.edges())
    for (std::uint32_t a = 0; a < n; ++a) emap.emplace_back(e);
  GraphMorphism projection(cover, base, std::move(vmap), std::move(emap));

  std::vector<Automorphism> gens;
  for (std::size_t i = 0; i < grp.rank(); ++i) {
    const std::uint32_t shift = grp.basis(i);
    std::vector<VertexId> vp(cover.vertex_count());
    std::vector<EdgeId> ep(cover.edge_count());
    for (std::uint32_t v = 0; v < base.vertex_count(); ++v)
      for (std::uint32_t a = 0; a < n; ++a) vp[v * n + a] = VertexId{v * n + grp.add(a, shift)};
    for (std::uint32_t e = 0; e < base.edge_count(); ++e)
      for (std::uint32_t a = 0; a < n; ++a) ep[e * n + a] = EdgeId{e * n + grp.add(a, shift)};
    gens.emplace_back(cover, std::move(vp), std::move(ep));
  }
  ActionGroup deck = generate_group(cover, gens);
  return DerivedCover{va, std::move(cover), std::move(projection), std::move(deck)};
}

namespace {

constexpr std::uint32_t kUnset = ~0u;

// Lift of gamma sending (v0, 0) to (gamma v0, b), or nothing.
std::optional<Automorphism> lift_from(const Automorphism& gamma, const DerivedCover& dc, std::uint32_t b) {
  const VoltageAssignment& va = dc.voltages;
  const MultiGraph& base = va.base;
  const AbelianGroup& grp = va.group;
  const auto n = static_cast<std::uint32_t>(grp.order());
  std::vector<std::uint32_t> vimg(dc.cover.vertex_count(), kUnset);
  std::vector<std::uint32_t> eimg(dc.cover.edge_count(), kUnset);

  // Cover edge over base edge e at the fibre element `a` of base vertex x,
  // and the fibre element of its other end.
  auto step = [&](EdgeId e, VertexId x, std::uint32_t a) -> std::pair<std::uint32_t, std::uint32_t> {
    const std::uint32_t volt = va.voltage[e.index];
    if (x == va.tail(e)) return {e.index * n + a, grp.add(a, volt)};
    const std::uint32_t start = grp.subtract(a, volt);
    return {e.index * n + start, start};
  };

  const VertexId v0{0};
  vimg[0] = gamma(v0).index * n + b;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t X = queue[head];
    const VertexId x{X / n};
    const std::uint32_t a = X % n;
    const VertexId gx{vimg[X] / n};
    const std::uint32_t c = vimg[X] % n;
    for (EdgeId e : base.incident_edges(x)) {
      auto [cover_edge, a_other] = step(e, x, a);
      const EdgeId f = gamma(e);
      auto [image_edge, c_other] = step(f, gx, c);
      if (eimg[cover_edge] == kUnset) eimg[cover_edge] = image_edge;
      else if (eimg[cover_edge] != image_edge) return std::nullopt;
      const std::uint32_t Y = base.opposite(e, x).index * n + a_other;
      const std::uint32_t image_y = base.opposite(f, gx).index * n + c_other;
      if (vimg[Y] == kUnset) {
        vimg[Y] = image_y;
        queue.push_back(Y);
      } else if (vimg[Y] != image_y) {
        return std::nullopt;
      }
    }
  }
  std::vector<VertexId> vp;
  vp.reserve(vimg.size());
  for (auto v : vimg) vp.push_back(VertexId{v});
  std::vector<EdgeId> ep;
  ep.reserve(eimg.size());
  for (auto e : eimg) ep.push_back(EdgeId{e});
  try {
    return Automorphism(dc.cover, std::move(vp), std::move(ep));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Automorphism> lift_automorphism(const Automorphism& gamma, const DerivedCover& dc) {
  const MultiGraph& base = dc.voltages.base;
  if (gamma.vertex_perm().size() != base.vertex_count() || gamma.edge_perm().size() != base.edge_count())
    throw Error(Errc::InvalidArgument, "automorphism does not act on the base graph");
  std::vector<Automorphism> lifts;
  const auto n = static_cast<std::uint32_t>(dc.voltages.group.order());
  for (std::uint32_t b = 0; b < n; ++b)
    if (auto l = lift_from(gamma, dc, b)) lifts.push_back(std::move(*l));
  if (!lifts.empty() && lifts.size() != n)
    throw TheoremViolation(Theorem::LiftCountMismatch,
                           "automorphism lifts for " + std::to_string(lifts.size()) + " of " +
                               std::to_string(n) + " fibre choices");
  return lifts;
}

MacbeathInstance macbeath(int m, std::size_t cap) {
  if (m < 1) throw Error(Errc::InvalidArgument, "macbeath needs m >= 1");
  const auto mm = static_cast<std::size_t>(m);
  if (6 * mm * mm > cap)
    throw Error(Errc::BudgetExceeded, "Γ(m) has order " + std::to_string(6 * mm * mm) + " > cap " +
                                          std::to_string(cap));
  FamilyInstance base = hurwitz_genus2();
  if (m == 1) {
    RamificationProfile p = profile(base.group);
    return MacbeathInstance{1, base.graph, base.group, std::move(p)};
  }
  const auto va = homology_voltages(base.graph, spanning_tree(base.graph), static_cast<std::uint32_t>(m));
  const DerivedCover dc = derived_cover(va);
  std::vector<Automorphism> elements;
  std::vector<Automorphism> generators(dc.deck.generators());
  for (const auto& gamma : base.group.elements()) {
    auto lifts = lift_automorphism(gamma, dc);
    if (lifts.empty())
      throw TheoremViolation(Theorem::LiftCountMismatch,
                             "a base automorphism fails to lift to the homology cover");
    for (const auto& named : base.named)
      if (named.element == gamma) generators.push_back(lifts.front());
    for (auto& l : lifts) elements.push_back(std::move(l));
  }
  ActionGroup group = ActionGroup::from_elements(dc.cover, std::move(elements), std::move(generators));
  RamificationProfile p = profile(group);
  return MacbeathInstance{m, dc.cover, std::move(group), std::move(p)};
}

}  // namespace harmonica

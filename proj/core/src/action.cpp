#include "harmonica/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "detail/weighted_graph.hpp"
#include "harmonica/error.hpp"

namespace harmonica {

// ---------------------------------------------------------------------------
// Automorphism

Automorphism::Automorphism(const MultiGraph& g, std::vector<VertexId> vertex_perm,
                           std::vector<EdgeId> edge_perm)
    : vertex_perm_(std::move(vertex_perm)), edge_perm_(std::move(edge_perm)) {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  if (vertex_perm_.size() != nv || edge_perm_.size() != ne)
    throw Error(Errc::NotBijective, "automorphism maps must cover every vertex and edge");
  std::vector<bool> hit(nv, false);
  for (VertexId v : vertex_perm_) {
    if (v.index >= nv || hit[v.index]) throw Error(Errc::NotBijective, "vertex map is not a bijection");
    hit[v.index] = true;
  }
  std::vector<bool> ehit(ne, false);
  for (EdgeId e : edge_perm_) {
    if (e.index >= ne || ehit[e.index]) throw Error(Errc::NotBijective, "edge map is not a bijection");
    ehit[e.index] = true;
  }
  for (EdgeId e : g.edges()) {
    auto [x, y] = g.ends(e);
    auto [a, b] = g.ends(edge_perm_[e.index]);
    VertexId fx = vertex_perm_[x.index];
    VertexId fy = vertex_perm_[y.index];
    if (!((a == fx && b == fy) || (a == fy && b == fx)))
      throw Error(Errc::IncidenceViolation,
                  "edge '" + g.name(e) + "' is sent to '" + g.name(edge_perm_[e.index]) +
                      "' whose ends are not the images of its ends");
  }
}

Automorphism Automorphism::identity(const MultiGraph& g) {
  return Automorphism(g.vertices(), g.edges());
}

bool Automorphism::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < vertex_perm_.size(); ++i)
    if (vertex_perm_[i].index != i) return false;
  for (std::uint32_t i = 0; i < edge_perm_.size(); ++i)
    if (edge_perm_[i].index != i) return false;
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<VertexId> vp(vertex_perm_.size());
  std::vector<EdgeId> ep(edge_perm_.size());
  for (std::uint32_t i = 0; i < vp.size(); ++i) vp[vertex_perm_[i].index] = VertexId{i};
  for (std::uint32_t i = 0; i < ep.size(); ++i) ep[edge_perm_[i].index] = EdgeId{i};
  return Automorphism(std::move(vp), std::move(ep));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  std::vector<VertexId> vp(b.vertex_perm_.size());
  std::vector<EdgeId> ep(b.edge_perm_.size());
  for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = a.vertex_perm_[b.vertex_perm_[i].index];
  for (std::size_t i = 0; i < ep.size(); ++i) ep[i] = a.edge_perm_[b.edge_perm_[i].index];
  return Automorphism(std::move(vp), std::move(ep));
}

std::size_t Automorphism::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint32_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (VertexId v : vertex_perm_) mix(v.index);
  mix(0xffffffffu);
  for (EdgeId e : edge_perm_) mix(e.index);
  return static_cast<std::size_t>(h);
}

Automorphism build_automorphism(const MultiGraph& g, std::vector<VertexId> vertex_perm,
                                std::vector<EdgeId> edge_perm) {
  return Automorphism(g, std::move(vertex_perm), std::move(edge_perm));
}

// ---------------------------------------------------------------------------
// ActionGroup

struct ActionGroup::Data {
  MultiGraph graph;
  std::vector<Automorphism> elements;
  std::vector<Automorphism> generators;
  std::unordered_map<Automorphism, std::size_t, AutomorphismHash> index;
};

namespace {

// Index-level closure inside a group whose products are available through
// `multiply`. Membership is a bitset over element indices.
using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

template <class Multiply>
std::vector<std::size_t> close(std::size_t order, std::span<const std::size_t> gens, Multiply&& mul,
                               Bits* membership = nullptr) {
  Bits bits((order + 63) / 64, 0);
  std::vector<std::size_t> members{0};
  set_bit(bits, 0);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t g : gens) {
      std::size_t p = mul(members[head], g);
      if (!test_bit(bits, p)) {
        set_bit(bits, p);
        members.push_back(p);
      }
    }
  }
  if (membership) *membership = std::move(bits);
  return members;
}

}  // namespace

ActionGroup ActionGroup::assemble(const MultiGraph& g, std::vector<Automorphism> elements,
                                  std::vector<Automorphism> generators) {
  auto d = std::make_shared<Data>();
  d->graph = g;
  d->elements = std::move(elements);
  d->index.reserve(d->elements.size());
  for (std::size_t i = 0; i < d->elements.size(); ++i) d->index.emplace(d->elements[i], i);
  if (generators.empty() && d->elements.size() > 1) {
    // Greedy: keep an element iff it is not yet generated by the earlier picks.
    std::vector<std::size_t> picks;
    Bits have;
    auto mul = [&](std::size_t i, std::size_t j) { return d->index.at(d->elements[i] * d->elements[j]); };
    close(d->elements.size(), picks, mul, &have);
    for (std::size_t i = 1; i < d->elements.size(); ++i) {
      if (test_bit(have, i)) continue;
      picks.push_back(i);
      close(d->elements.size(), picks, mul, &have);
    }
    for (std::size_t i : picks) generators.push_back(d->elements[i]);
  }
  d->generators = std::move(generators);
  return ActionGroup(std::move(d));
}

ActionGroup ActionGroup::from_elements(const MultiGraph& g, std::vector<Automorphism> elements,
                                       std::vector<Automorphism> generators) {
  const Automorphism id = Automorphism::identity(g);
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw Error(Errc::InvalidArgument, "element set lacks the identity");
  std::iter_swap(elements.begin(), it);
  std::unordered_map<Automorphism, std::size_t, AutomorphismHash> seen;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].vertex_perm().size() != g.vertex_count() ||
        elements[i].edge_perm().size() != g.edge_count())
      throw Error(Errc::InvalidArgument, "element acts on a different graph");
    if (!seen.emplace(elements[i], i).second)
      throw Error(Errc::InvalidArgument, "duplicate group element");
  }
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!seen.contains(a * b)) throw Error(Errc::InvalidArgument, "element set is not closed");
  for (const auto& gen : generators)
    if (!seen.contains(gen)) throw Error(Errc::InvalidArgument, "generator outside the element set");
  return assemble(g, std::move(elements), std::move(generators));
}

const MultiGraph& ActionGroup::graph() const noexcept { return d_->graph; }
std::size_t ActionGroup::order() const noexcept { return d_->elements.size(); }
const std::vector<Automorphism>& ActionGroup::elements() const noexcept { return d_->elements; }
const std::vector<Automorphism>& ActionGroup::generators() const noexcept { return d_->generators; }
const Automorphism& ActionGroup::element(std::size_t i) const { return d_->elements.at(i); }

std::optional<std::size_t> ActionGroup::index_of(const Automorphism& a) const {
  auto it = d_->index.find(a);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t ActionGroup::multiply(std::size_t i, std::size_t j) const {
  return d_->index.at(d_->elements[i] * d_->elements[j]);
}

ActionGroup ActionGroup::subgroup(std::span<const std::size_t> element_indices) const {
  std::vector<std::size_t> sorted(element_indices.begin(), element_indices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Automorphism> elems;
  elems.reserve(sorted.size());
  for (std::size_t i : sorted) elems.push_back(d_->elements.at(i));
  return assemble(d_->graph, std::move(elems), {});
}

ActionGroup ActionGroup::generated_subgroup(std::span<const std::size_t> generator_indices) const {
  auto members = close(order(), generator_indices, [&](std::size_t i, std::size_t j) { return multiply(i, j); });
  std::sort(members.begin(), members.end());
  std::vector<Automorphism> elems, gens;
  for (std::size_t i : members) elems.push_back(d_->elements[i]);
  for (std::size_t i : generator_indices)
    if (i != 0) gens.push_back(d_->elements.at(i));
  return assemble(d_->graph, std::move(elems), std::move(gens));
}

ActionGroup generate_group(const MultiGraph& g, std::span<const Automorphism> generators,
                           std::size_t cap) {
  std::vector<Automorphism> gens;
  for (const auto& a : generators) {
    if (a.vertex_perm().size() != g.vertex_count() || a.edge_perm().size() != g.edge_count())
      throw Error(Errc::InvalidArgument, "generator acts on a different graph");
    gens.push_back(a);
  }
  std::vector<Automorphism> elements{Automorphism::identity(g)};
  std::unordered_map<Automorphism, std::size_t, AutomorphismHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : gens) {
      Automorphism p = elements[head] * gen;
      if (seen.contains(p)) continue;
      if (elements.size() >= cap)
        throw Error(Errc::BudgetExceeded, "group closure exceeds cap of " + std::to_string(cap));
      seen.emplace(p, elements.size());
      elements.push_back(std::move(p));
    }
  }
  std::vector<Automorphism> kept;
  for (auto& a : gens)
    if (!a.is_identity()) kept.push_back(a);
  return ActionGroup::assemble(g, std::move(elements), std::move(kept));
}

// ---------------------------------------------------------------------------
// Aut(G): vertex automorphisms of the multiplicity-labelled support, each
// extended by every permutation of every parallel class.

namespace {

struct ParallelClass {
  VertexId u, v;
  std::vector<EdgeId> edges;
};

std::vector<ParallelClass> parallel_classes(const MultiGraph& g) {
  std::vector<ParallelClass> out;
  for (VertexId u : g.vertices())
    for (const Adjacent& a : g.adjacent(u))
      if (u < a.vertex) out.push_back(ParallelClass{u, a.vertex, a.edges});
  return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r)) return static_cast<std::size_t>(-1);
  return r;
}

std::size_t parallel_factor(const std::vector<ParallelClass>& classes) {
  std::size_t f = 1;
  for (const auto& c : classes)
    for (std::size_t k = 2; k <= c.edges.size(); ++k) f = saturating_mul(f, k);
  return f;
}

}  // namespace

std::size_t automorphism_group_order(const MultiGraph& g) {
  std::size_t count = 0;
  detail::for_each_automorphism(detail::WeightedGraph::from(g), [&](std::span<const std::uint32_t>) {
    ++count;
    return true;
  });
  return saturating_mul(count, parallel_factor(parallel_classes(g)));
}

ActionGroup automorphism_group(const MultiGraph& g, std::size_t budget) {
  const auto classes = parallel_classes(g);
  const std::size_t factor = parallel_factor(classes);
  std::vector<std::vector<std::uint32_t>> vertex_autos;
  detail::for_each_automorphism(detail::WeightedGraph::from(g), [&](std::span<const std::uint32_t> p) {
    vertex_autos.emplace_back(p.begin(), p.end());
    if (saturating_mul(vertex_autos.size(), factor) > budget)
      throw Error(Errc::BudgetExceeded, "|Aut(G)| exceeds budget " + std::to_string(budget));
    return true;
  });

  std::vector<Automorphism> elements;
  elements.reserve(vertex_autos.size() * factor);
  for (const auto& p : vertex_autos) {
    std::vector<VertexId> vp(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) vp[i] = VertexId{p[i]};
    // Per class: source edges, target edges, and the current permutation.
    std::vector<std::vector<EdgeId>> targets;
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& c : classes) {
      auto t = g.parallel_edges(vp[c.u.index], vp[c.v.index]);
      targets.emplace_back(t.begin(), t.end());
      perms.emplace_back(c.edges.size());
      std::iota(perms.back().begin(), perms.back().end(), std::size_t{0});
    }
    std::vector<EdgeId> ep(g.edge_count());
    while (true) {
      for (std::size_t k = 0; k < classes.size(); ++k)
        for (std::size_t i = 0; i < classes[k].edges.size(); ++i)
          ep[classes[k].edges[i].index] = targets[k][perms[k][i]];
      elements.push_back(Automorphism(g, vp, ep));
      std::size_t k = 0;
      while (k < perms.size() && !std::next_permutation(perms[k].begin(), perms[k].end())) ++k;
      if (k == perms.size()) break;
    }
  }
  std::sort(elements.begin(), elements.end(), [](const Automorphism& a, const Automorphism& b) {
    if (a.vertex_perm() != b.vertex_perm()) return a.vertex_perm() < b.vertex_perm();
    return a.edge_perm() < b.edge_perm();
  });
  return ActionGroup::assemble(g, std::move(elements), {});
}

// ---------------------------------------------------------------------------
// Orbits, quotients, harmonicity

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Orbit index per item, orbits numbered by smallest member.
template <class Image>
std::vector<std::uint32_t> orbit_partition(std::size_t n, const std::vector<Automorphism>& gens,
                                           Image&& image) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (const auto& a : gens)
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t r1 = find_root(parent, i), r2 = find_root(parent, image(a, i));
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  std::vector<std::uint32_t> id(n, ~0u), out(n);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = find_root(parent, i);
    if (id[r] == ~0u) id[r] = next++;
    out[i] = id[r];
  }
  return out;
}

}  // namespace

OrbitData orbits_and_stabilizers(const ActionGroup& group) {
  const MultiGraph& g = group.graph();
  OrbitData od;
  od.vertex_orbit = orbit_partition(g.vertex_count(), group.generators(),
                                    [](const Automorphism& a, std::uint32_t i) { return a(VertexId{i}).index; });
  od.edge_orbit = orbit_partition(g.edge_count(), group.generators(),
                                  [](const Automorphism& a, std::uint32_t i) { return a(EdgeId{i}).index; });
  for (std::uint32_t v = 0; v < od.vertex_orbit.size(); ++v) {
    if (od.vertex_orbit[v] >= od.vertex_orbits.size()) od.vertex_orbits.emplace_back();
    od.vertex_orbits[od.vertex_orbit[v]].push_back(VertexId{v});
  }
  for (std::uint32_t e = 0; e < od.edge_orbit.size(); ++e) {
    if (od.edge_orbit[e] >= od.edge_orbits.size()) od.edge_orbits.emplace_back();
    od.edge_orbits[od.edge_orbit[e]].push_back(EdgeId{e});
  }
  od.stabilizer_order.assign(g.vertex_count(), 0);
  for (const auto& a : group.elements())
    for (VertexId v : g.vertices())
      if (a.fixes(v)) ++od.stabilizer_order[v.index];
  for (VertexId v : g.vertices()) {
    const std::size_t orbit = od.vertex_orbits[od.vertex_orbit[v.index]].size();
    if (orbit * od.stabilizer_order[v.index] != group.order())
      throw TheoremViolation(Theorem::OrbitStabilizer,
                             "orbit-stabilizer fails at '" + g.name(v) + "'");
  }
  return od;
}

Quotient quotient(const ActionGroup& group) {
  const MultiGraph& g = group.graph();
  const OrbitData od = orbits_and_stabilizers(group);

  GraphBuilder b;
  for (const auto& orbit : od.vertex_orbits) b.add_vertex(g.name(orbit.front()));
  std::vector<std::int64_t> edge_of_orbit(od.edge_orbits.size(), -1);
  for (std::size_t k = 0; k < od.edge_orbits.size(); ++k) {
    EdgeId rep = od.edge_orbits[k].front();
    auto [x, y] = g.ends(rep);
    std::uint32_t ox = od.vertex_orbit[x.index], oy = od.vertex_orbit[y.index];
    if (ox == oy) continue;
    edge_of_orbit[k] = b.add_edge(g.name(rep), VertexId{ox}, VertexId{oy}).index;
  }
  MultiGraph target = b.build();

  std::vector<VertexId> vmap(g.vertex_count());
  for (VertexId v : g.vertices()) vmap[v.index] = VertexId{od.vertex_orbit[v.index]};
  std::vector<EdgeImage> emap;
  emap.reserve(g.edge_count());
  for (EdgeId e : g.edges()) {
    std::int64_t q = edge_of_orbit[od.edge_orbit[e.index]];
    emap.push_back(q < 0 ? EdgeImage::collapsed() : EdgeImage(EdgeId{static_cast<std::uint32_t>(q)}));
  }
  GraphMorphism phi(g, target, std::move(vmap), std::move(emap));
  return Quotient{std::move(target), std::move(phi)};
}

GraphMorphism tower_morphism(const ActionGroup& sub, const ActionGroup& group) {
  if (!(sub.graph() == group.graph()))
    throw Error(Errc::InvalidArgument, "tower_morphism: groups act on different graphs");
  for (const auto& a : sub.elements())
    if (!group.contains(a)) throw Error(Errc::InvalidArgument, "tower_morphism: not a subgroup");
  const MultiGraph& g = group.graph();
  const Quotient lower = quotient(sub);
  const Quotient upper = quotient(group);
  // Every lower-quotient vertex/edge is named after a representative in G.
  std::vector<VertexId> vmap;
  for (VertexId y : lower.graph.vertices())
    vmap.push_back(upper.morphism(g.vertex(lower.graph.name(y))));
  std::vector<EdgeImage> emap;
  for (EdgeId f : lower.graph.edges()) emap.push_back(upper.morphism(g.edge(lower.graph.name(f))));
  return GraphMorphism(lower.graph, upper.graph, std::move(vmap), std::move(emap));
}

HarmonicVerdict is_harmonic_action(const ActionGroup& group) {
  const MultiGraph& g = group.graph();
  const OrbitData od = orbits_and_stabilizers(group);
  HarmonicVerdict verdict;
  for (VertexId x : g.vertices()) {
    for (std::size_t k = 1; k < group.order(); ++k) {
      const Automorphism& a = group.element(k);
      if (!a.fixes(x)) continue;
      for (EdgeId e : g.incident_edges(x)) {
        if (a.fixes(e)) {
          verdict.harmonic = false;
          verdict.fixed_edge = FixedDirectedEdge{k, x, e};
          return verdict;
        }
      }
    }
  }
  for (VertexId x : g.vertices()) {
    bool escapes = false;
    for (const Adjacent& a : g.adjacent(x))
      if (od.vertex_orbit[a.vertex.index] != od.vertex_orbit[x.index]) {
        escapes = true;
        break;
      }
    if (!escapes) {
      verdict.harmonic = false;
      verdict.degenerate_vertex = x;
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

struct ProductTable {
  explicit ProductTable(const ActionGroup& group) : n(group.order()), table(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = group.multiply(i, j);
  }
  std::size_t operator()(std::size_t i, std::size_t j) const { return table[i * n + j]; }
  std::size_t n;
  std::vector<std::size_t> table;
};

struct IndexedSubgroup {
  Bits bits;
  std::vector<std::size_t> members;
  std::vector<std::size_t> gens;
};

std::vector<IndexedSubgroup> cyclic_indexed(std::size_t order, const ProductTable& mul) {
  std::vector<IndexedSubgroup> out;
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  for (std::size_t i = 0; i < order; ++i) {
    IndexedSubgroup s;
    s.gens = i == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{i};
    s.members = close(order, s.gens, mul, &s.bits);
    if (seen.emplace(s.bits, out.size()).second) out.push_back(std::move(s));
  }
  return out;
}

bool quotient_is_good(const ActionGroup& sub) {
  const Quotient q = quotient(sub);
  return is_nondegenerate(q.morphism) && is_harmonic(q.morphism);
}

}  // namespace

std::vector<ActionGroup> cyclic_subgroups(const ActionGroup& group) {
  std::vector<ActionGroup> out;
  std::unordered_map<Bits, bool, BitsHash> seen;
  auto mul = [&](std::size_t i, std::size_t j) { return group.multiply(i, j); };
  for (std::size_t i = 0; i < group.order(); ++i) {
    Bits bits;
    std::vector<std::size_t> gens;
    if (i != 0) gens.push_back(i);
    close(group.order(), gens, mul, &bits);
    if (seen.emplace(bits, true).second) out.push_back(group.generated_subgroup(gens));
  }
  return out;
}

std::vector<ActionGroup> subgroups(const ActionGroup& group, std::size_t budget) {
  if (group.order() > budget)
    throw Error(Errc::BudgetExceeded, "subgroup enumeration: |Γ| = " + std::to_string(group.order()) +
                                          " exceeds budget " + std::to_string(budget));
  const std::size_t n = group.order();
  const ProductTable mul(group);
  std::vector<IndexedSubgroup> cyclic = cyclic_indexed(n, mul);
  std::vector<IndexedSubgroup> all = cyclic;
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  for (std::size_t i = 0; i < all.size(); ++i) seen.emplace(all[i].bits, i);

  // Every subgroup is a join of cyclic ones, so joining with one cyclic
  // subgroup at a time reaches them all.
  std::vector<std::size_t> frontier(all.size());
  std::iota(frontier.begin(), frontier.end(), std::size_t{0});
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t h : frontier) {
      for (const auto& c : cyclic) {
        if (c.gens.empty() || test_bit(all[h].bits, c.gens[0])) continue;
        IndexedSubgroup j;
        j.gens = all[h].gens;
        j.gens.push_back(c.gens[0]);
        j.members = close(n, j.gens, mul, &j.bits);
        if (seen.contains(j.bits)) continue;
        seen.emplace(j.bits, all.size());
        next.push_back(all.size());
        all.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::stable_sort(all.begin(), all.end(), [](const IndexedSubgroup& a, const IndexedSubgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.bits < b.bits;
  });
  std::vector<ActionGroup> out;
  out.reserve(all.size());
  for (const auto& s : all) out.push_back(group.generated_subgroup(s.gens));
  return out;
}

bool is_harmonic_action_by_definition(const ActionGroup& group, std::size_t budget) {
  if (group.order() > budget)
    throw Error(Errc::BudgetExceeded, "definition check: |Γ| = " + std::to_string(group.order()) +
                                          " exceeds budget " + std::to_string(budget));
  // Cheap failures first: the whole group, then its cyclic subgroups.
  if (!quotient_is_good(group)) return false;
  for (const auto& c : cyclic_subgroups(group))
    if (!quotient_is_good(c)) return false;
  for (const auto& s : subgroups(group, budget))
    if (!quotient_is_good(s)) return false;
  return true;
}

}  // namespace harmonica

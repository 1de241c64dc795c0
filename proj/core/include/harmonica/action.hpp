#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "harmonica/morphism.hpp"
#include "harmonica/multigraph.hpp"

namespace harmonica {

/// Default cap on group orders for automorphism-group and subgroup
/// enumeration (overridable from the CLI via HARMONICA_BUDGET).
inline constexpr std::size_t kDefaultGroupBudget = 256;
/// Default cap on closure when generating a group from generators.
inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 16;

/// Incidence-compatible pair of permutations of V(G) and E(G).
class Automorphism {
 public:
  /// Validates bijectivity and incidence against g. Throws
  /// Error(NotBijective | IncidenceViolation).
  Automorphism(const MultiGraph& g, std::vector<VertexId> vertex_perm, std::vector<EdgeId> edge_perm);

  static Automorphism identity(const MultiGraph& g);

  VertexId operator()(VertexId v) const { return vertex_perm_[v.index]; }
  EdgeId operator()(EdgeId e) const { return edge_perm_[e.index]; }

  const std::vector<VertexId>& vertex_perm() const noexcept { return vertex_perm_; }
  const std::vector<EdgeId>& edge_perm() const noexcept { return edge_perm_; }

  bool is_identity() const noexcept;
  bool fixes(VertexId v) const { return (*this)(v) == v; }
  bool fixes(EdgeId e) const { return (*this)(e) == e; }

  Automorphism inverse() const;

  /// (a * b)(x) = a(b(x)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism&, const Automorphism&) = default;

  std::size_t hash() const noexcept;

 private:
  Automorphism(std::vector<VertexId> vertex_perm, std::vector<EdgeId> edge_perm) noexcept
      : vertex_perm_(std::move(vertex_perm)), edge_perm_(std::move(edge_perm)) {}

  std::vector<VertexId> vertex_perm_;
  std::vector<EdgeId> edge_perm_;
};

struct AutomorphismHash {
  std::size_t operator()(const Automorphism& a) const noexcept { return a.hash(); }
};

Automorphism build_automorphism(const MultiGraph& g, std::vector<VertexId> vertex_perm,
                                std::vector<EdgeId> edge_perm);

/// Finite group of automorphisms of one graph, stored element by element.
/// elements()[0] is the identity. Copies share storage.
class ActionGroup {
 public:
  /// Checks that `elements` is closed under products and contains the
  /// identity. Generators are derived greedily when none are supplied.
  /// Throws Error(InvalidArgument).
  static ActionGroup from_elements(const MultiGraph& g, std::vector<Automorphism> elements,
                                   std::vector<Automorphism> generators = {});

  const MultiGraph& graph() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Automorphism>& elements() const noexcept;
  const std::vector<Automorphism>& generators() const noexcept;
  const Automorphism& element(std::size_t i) const;

  std::optional<std::size_t> index_of(const Automorphism& a) const;
  bool contains(const Automorphism& a) const { return index_of(a).has_value(); }

  /// Index of element(i) * element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const;

  /// Subgroup made of the listed elements (must be closed; not re-verified).
  ActionGroup subgroup(std::span<const std::size_t> element_indices) const;

  /// Subgroup generated by the listed elements.
  ActionGroup generated_subgroup(std::span<const std::size_t> generator_indices) const;

 private:
  struct Data;
  explicit ActionGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static ActionGroup assemble(const MultiGraph& g, std::vector<Automorphism> elements,
                              std::vector<Automorphism> generators);
  friend ActionGroup generate_group(const MultiGraph&, std::span<const Automorphism>, std::size_t);
  friend ActionGroup automorphism_group(const MultiGraph&, std::size_t);
  std::shared_ptr<const Data> d_;
};

/// Closure of the generators (breadth-first, generator order). Throws
/// Error(BudgetExceeded) once the closure passes `cap` elements.
ActionGroup generate_group(const MultiGraph& g, std::span<const Automorphism> generators,
                           std::size_t cap = kDefaultClosureCap);

/// Full Aut(G). Throws Error(BudgetExceeded) if |Aut(G)| > budget.
ActionGroup automorphism_group(const MultiGraph& g, std::size_t budget = kDefaultGroupBudget);

/// Exact |Aut(G)| without materialising the group.
std::size_t automorphism_group_order(const MultiGraph& g);

struct OrbitData {
  std::vector<std::uint32_t> vertex_orbit;  // orbit index per vertex
  std::vector<std::vector<VertexId>> vertex_orbits;
  std::vector<std::uint32_t> edge_orbit;
  std::vector<std::vector<EdgeId>> edge_orbits;
  std::vector<std::size_t> stabilizer_order;  // |Γ_x| per vertex
};

/// Orbits are ordered by their smallest member. Throws TheoremViolation if
/// |Γ| != |Γx|·|Γ_x| anywhere.
OrbitData orbits_and_stabilizers(const ActionGroup& group);

struct Quotient {
  MultiGraph graph;
  GraphMorphism morphism;
};

/// G/Γ with the quotient morphism. Quotient vertices and edges carry the names
/// of their orbit representatives; edges whose ends share an orbit are vertical.
Quotient quotient(const ActionGroup& group);

/// Induced map G/Δ -> G/Γ for Δ ≤ Γ acting on the same graph.
GraphMorphism tower_morphism(const ActionGroup& sub, const ActionGroup& group);

/// A non-identity element fixing a vertex and one of its edges.
struct FixedDirectedEdge {
  std::size_t element;  // index into group.elements()
  VertexId vertex;
  EdgeId edge;
};

struct HarmonicVerdict {
  bool harmonic = true;
  std::optional<FixedDirectedEdge> fixed_edge;
  std::optional<VertexId> degenerate_vertex;  // every neighbour lies in Γx
  explicit operator bool() const noexcept { return harmonic; }
};

/// Stabilizer/orbit criterion: Γ_x acts freely on E(x(1)) and V(x(1)) ⊄ Γx
/// for every x.
HarmonicVerdict is_harmonic_action(const ActionGroup& group);

/// Checks every subgroup's quotient morphism for harmonicity and
/// non-degeneracy. Throws Error(BudgetExceeded) when |Γ| > budget.
bool is_harmonic_action_by_definition(const ActionGroup& group,
                                      std::size_t budget = kDefaultGroupBudget);

/// Distinct cyclic subgroups, trivial group first.
std::vector<ActionGroup> cyclic_subgroups(const ActionGroup& group);

/// Every subgroup, trivial and full included, ordered by size.
/// Throws Error(BudgetExceeded) when |Γ| > budget.
std::vector<ActionGroup> subgroups(const ActionGroup& group, std::size_t budget = kDefaultGroupBudget);

}  // namespace harmonica

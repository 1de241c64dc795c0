#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/morphism.hpp"
#include "harmonica/ramification.hpp"

namespace harmonica {

/// (Z/m1) x ... x (Z/mk). Elements are dense indices in mixed radix with the
/// first coordinate varying fastest.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group
  /// Every modulus must be >= 2. Throws Error(InvalidArgument).
  explicit AbelianGroup(std::vector<std::uint32_t> moduli);

  /// (Z/m)^rank.
  static AbelianGroup power(std::uint32_t m, std::size_t rank);

  const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negate(std::uint32_t a) const;
  std::uint32_t subtract(std::uint32_t a, std::uint32_t b) const { return add(a, negate(b)); }

  std::vector<std::uint32_t> coordinates(std::uint32_t a) const;
  std::uint32_t element(std::span<const std::uint32_t> coordinates) const;
  std::uint32_t basis(std::size_t i) const;

  /// "0" for the trivial group, otherwise coordinates joined by '.'.
  std::string label(std::uint32_t a) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint32_t> moduli_;
  std::size_t order_ = 1;
};

/// Voltages on a base graph, zero on a fixed spanning tree. Every edge is
/// oriented from its lower-index end to its higher-index end; traversing it
/// backwards contributes the negated voltage.
struct VoltageAssignment {
  MultiGraph base;
  std::vector<EdgeId> tree;  // sorted
  AbelianGroup group;
  std::vector<std::uint32_t> voltage;  // per edge

  VertexId tail(EdgeId e) const;
  VertexId head(EdgeId e) const;
  std::vector<EdgeId> cotree() const;
};

/// Breadth-first from vertex 0, scanning incident edges in index order.
/// Throws Error(Disconnected).
std::vector<EdgeId> spanning_tree(const MultiGraph& g);

/// Validates the tree and the voltages. Throws Error(BadTree | InvalidArgument).
VoltageAssignment make_voltage_assignment(const MultiGraph& base, std::vector<EdgeId> tree,
                                          AbelianGroup group, std::vector<std::uint32_t> voltage);

/// The i-th cotree edge (by index) gets the i-th basis vector of (Z/m)^g.
/// Throws Error(BadTree | InvalidArgument).
VoltageAssignment homology_voltages(const MultiGraph& g, std::vector<EdgeId> tree, std::uint32_t m);

struct DerivedCover {
  VoltageAssignment voltages;
  MultiGraph cover;        // vertex (v, a) has index v*|A| + a, edge (e, a) index e*|A| + a
  GraphMorphism projection;
  ActionGroup deck;        // translations

  VertexId lift(VertexId v, std::uint32_t a) const;
  EdgeId lift(EdgeId e, std::uint32_t a) const;
};

/// Cover with edge (e, a) joining (tail e, a) and (head e, a + voltage e).
/// Throws Error(DisconnectedCover); TheoremViolation(CoverGenusIdentity) if
/// g(cover) - 1 != |A|(g(base) - 1).
DerivedCover derived_cover(const VoltageAssignment& va);

/// All lifts of a base automorphism, one per choice of image fibre element
/// over vertex 0. Empty when the automorphism does not lift.
/// TheoremViolation(LiftCountMismatch) if only some choices succeed.
std::vector<Automorphism> lift_automorphism(const Automorphism& gamma, const DerivedCover& dc);

struct MacbeathInstance {
  int m = 1;
  MultiGraph graph;
  ActionGroup group;
  RamificationProfile profile;
};

/// Mod-m homology cover of the genus-2 extremal graph with every lift of its
/// order-6 group. m = 1 gives the base pair. Throws Error(InvalidArgument)
/// for m < 1, Error(BudgetExceeded) when 6m^2 > cap.
MacbeathInstance macbeath(int m, std::size_t cap = kDefaultClosureCap);

}  // namespace harmonica

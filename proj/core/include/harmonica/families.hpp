#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/ramification.hpp"

namespace harmonica {

/// A tree with a distinguished root.
struct RootedTree {
  MultiGraph tree;
  VertexId root;

  /// Throws Error(BadTree) unless `tree` is connected of genus 0.
  static RootedTree make(MultiGraph tree, VertexId root);

  static RootedTree single_vertex();
  static RootedTree single_edge();  // rooted at an end
  static RootedTree path(std::size_t edges);  // rooted at an end
  static RootedTree star(std::size_t leaves);  // rooted at the centre
};

/// Finite group given by its multiplication table.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = a·b
  std::size_t identity = 0;

  std::size_t order() const noexcept { return labels.size(); }

  /// Checks closure, identity, inverses and associativity. Throws
  /// Error(InvalidGroupTable).
  static GroupTable make(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  static GroupTable cyclic(std::size_t n);
  static GroupTable klein_four();
  static GroupTable dihedral(std::size_t n);  // order 2n
};

struct NamedAutomorphism {
  std::string name;
  Automorphism element;
};

struct FamilyInstance {
  std::string name;
  MultiGraph graph;
  ActionGroup group;
  bool harmonic = true;
  RamificationProfile expected;  // summary: order, genera, branch shapes, R
  std::vector<NamedAutomorphism> named;

  const Automorphism& automorphism(const std::string& name) const;  // throws InvalidArgument
};

struct Barbell {
  MultiGraph graph;
  Automorphism horizontal_reflection;
  Automorphism vertical_reflection;
  Automorphism half_rotation;
};

/// Vertices a, b, c, d; edges ab1 (top), ab2 (bottom), bc, cd1 (top), cd2 (bottom).
Barbell barbell();

FamilyInstance klein_genus3();
FamilyInstance klein_genus5();

/// n-cycle c0..c(n-1) with two copies of T glued at each cycle vertex, under
/// the dihedral group. Named: "rotation", "reflection_vertex" (i -> -i) and
/// "reflection_edge" (i -> 1-i). Throws Error(InvalidArgument) for n < 3 and
/// Error(DegenerateTree) if T has no edges.
FamilyInstance decorated_cycle(std::size_t n, const RootedTree& t);

/// Two copies of T0 with their roots joined by one edge, under the swap.
/// Throws Error(DegenerateTree) if T0 has no edges.
FamilyInstance tree_double(const RootedTree& t0);

/// |Γ| copies of T0 glued at their roots, permuted by left multiplication.
/// Throws Error(DegenerateTree) if T0 has no edges or |Γ| < 2.
FamilyInstance tree_star(const RootedTree& t0, const GroupTable& group);

/// Centres CL, CR joined by m1..m3, with leaves L1..L3 on CL and R1..R3 on CR.
/// Named: "sigma" (order 3), "tau" (swap of sides).
FamilyInstance hurwitz_genus2();

/// g - 1 squares joined at opposite corners into a necklace, with the
/// order-4(g-1) group Z/2 x D_{g-1}. Throws Error(InvalidArgument) for g < 3.
FamilyInstance lower_bound_family(int g);

}  // namespace harmonica

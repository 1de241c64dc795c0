#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/rational.hpp"

namespace harmonica {

struct VertexRamification {
  VertexId vertex;
  std::size_t m = 0;  // |Γ_x|, the horizontal multiplicity
  std::size_t v = 0;  // vertical multiplicity
  std::size_t w = 0;  // v / m
  friend bool operator==(const VertexRamification&, const VertexRamification&) = default;
};

/// (r_y, w_y) for one quotient vertex.
struct BranchShape {
  std::size_t r = 1;
  std::size_t w = 0;
  friend auto operator<=>(const BranchShape&, const BranchShape&) = default;
};

struct BranchPoint {
  VertexId y;  // vertex of the quotient graph
  BranchShape shape;
  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

struct RamificationProfile {
  std::size_t order = 0;
  int genus = 0;
  int quotient_genus = 0;
  std::vector<VertexRamification> vertices;  // empty for hand-built summaries
  std::vector<BranchPoint> branch_points;    // ordered by quotient vertex
  Rational R;
  std::size_t s = 0;  // branch points with r > 1
  std::size_t t = 0;  // branch points with r = 1 and w >= 1

  std::vector<BranchShape> branch_shapes() const;
};

/// 2(1 - 1/r) + w summed over the shapes.
Rational ramification_number(std::span<const BranchShape> shapes);

/// Profile of a harmonic action. Throws Error(NotHarmonic);
/// TheoremViolation(FiberInconsistent | StabilizerMultiplicity) if the
/// quotient data disagrees with the stabilizers.
RamificationProfile profile(const ActionGroup& group);

/// Profile assembled from a bare branch list (order, genera and shapes only).
RamificationProfile summary_profile(std::size_t order, int genus, int quotient_genus,
                                    std::span<const BranchShape> shapes);

struct RiemannHurwitzTerms {
  std::int64_t lhs = 0;         // 2g - 2
  std::int64_t vertex_sum = 0;  // |Γ|(2g'-2) + Σ_x [2(m(x)-1) + v(x)]
  Rational branch_form;         // |Γ|(2g'-2+R)
};

RiemannHurwitzTerms riemann_hurwitz_terms(const RamificationProfile& p);

/// Both forms hold exactly. Profiles without per-vertex data are checked in
/// the branch-point form only.
bool verify_riemann_hurwitz(const RamificationProfile& p);

enum class BranchKind {
  Unramified,       // R = 0
  LowHorizontal,    // R < 2, one point (r, 0) with r >= 2
  LowVertical,      // R < 2, one point (1, 1)
  Two,              // R = 2
  SevenThirds,      // R = 7/3
  High,             // R > 7/3
};

struct BranchCase {
  BranchKind kind = BranchKind::Unramified;
  std::size_t r = 0;    // LowHorizontal only
  std::string variant;  // "i", "iia", "iib", "iic" for Two; "i", "ii", "iii" for SevenThirds
  Rational R;

  /// R0_UNRAMIFIED, RLT2_HORIZONTAL(3), RLT2_VERTICAL, REQ2_CASE(iia),
  /// RGT2_MIN(i), RGT2_OTHER.
  std::string tag() const;
  friend bool operator==(const BranchCase&, const BranchCase&) = default;
};

/// Shapes with r = 1 and w = 0 are ignored. Throws
/// TheoremViolation(ClassificationGap) for a locus outside the case list.
BranchCase classify_branch_locus(std::span<const BranchShape> shapes);
BranchCase classify_branch_locus(const RamificationProfile& p);

/// Every prime dividing |Γ| is at most g + 1. Throws Error(GenusTooSmall).
bool check_prime_divisor_bound(const RamificationProfile& p);

/// For |C| = p prime, g - 1 = p(g1 - 1), g1 > 1 and p > g1 + 1: the cover
/// G -> G/C has no horizontal ramification. Throws Error(HypothesisUnmet).
bool check_cyclic_unramified(const ActionGroup& c, int g1);

/// |Γ| outside (4(g-1), 6(g-1)), and |Γ| > 4(g-1) forces |Γ| = 6(g-1),
/// g' = 0, R = 7/3. Throws Error(GenusTooSmall).
bool check_gap_theorem(const RamificationProfile& p);

/// |Γ| <= 6(g-1). Throws Error(GenusTooSmall).
bool check_hurwitz_bound(const RamificationProfile& p);

/// For g' >= 1: R = 0 gives |Γ| <= g-1 and R > 0 gives |Γ| <= 2g-2.
/// Vacuously true when g' = 0. Throws Error(GenusTooSmall).
bool check_positive_quotient_genus_bounds(const RamificationProfile& p);

bool is_prime(std::size_t n) noexcept;
std::vector<std::size_t> prime_factors(std::size_t n);

}  // namespace harmonica

#include "harmonica/ramification.hpp"

#include <algorithm>
#include <optional>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

Rational term(const BranchShape& b) {
  return Rational(2) * (Rational(1) - Rational(1, static_cast<std::int64_t>(b.r))) +
         Rational(static_cast<std::int64_t>(b.w));
}

bool is_branch(const BranchShape& b) { return b.r > 1 || b.w > 0; }

void require_genus_two(const RamificationProfile& p) {
  if (p.genus < 2)
    throw Error(Errc::GenusTooSmall, "requires genus >= 2, got " + std::to_string(p.genus));
}

void count_s_t(RamificationProfile& p) {
  p.s = p.t = 0;
  for (const auto& b : p.branch_points) {
    if (b.shape.r > 1) ++p.s;
    else if (b.shape.w >= 1) ++p.t;
  }
}

}  // namespace

std::vector<BranchShape> RamificationProfile::branch_shapes() const {
  std::vector<BranchShape> out;
  out.reserve(branch_points.size());
  for (const auto& b : branch_points) out.push_back(b.shape);
  return out;
}

Rational ramification_number(std::span<const BranchShape> shapes) {
  Rational r;
  for (const auto& b : shapes) {
    if (b.r == 0) throw Error(Errc::InvalidArgument, "stabilizer order r must be positive");
    r += term(b);
  }
  return r;
}

RamificationProfile profile(const ActionGroup& group) {
  if (!is_harmonic_action(group))
    throw Error(Errc::NotHarmonic, "profile requires a harmonic action");
  const MultiGraph& g = group.graph();
  const OrbitData od = orbits_and_stabilizers(group);
  const Quotient q = quotient(group);

  RamificationProfile p;
  p.order = group.order();
  p.genus = genus(g);
  p.quotient_genus = genus(q.graph);

  std::vector<std::optional<BranchShape>> fiber(q.graph.vertex_count());
  for (VertexId x : g.vertices()) {
    const Multiplicities mv = multiplicities(q.morphism, x);
    const std::size_t stab = od.stabilizer_order[x.index];
    if (mv.horizontal != stab)
      throw TheoremViolation(Theorem::StabilizerMultiplicity,
                             "m(x) != |Γ_x| at '" + g.name(x) + "'");
    if (mv.vertical % stab != 0)
      throw TheoremViolation(Theorem::StabilizerMultiplicity,
                             "|Γ_x| does not divide v(x) at '" + g.name(x) + "'");
    const BranchShape shape{stab, mv.vertical / stab};
    p.vertices.push_back(VertexRamification{x, mv.horizontal, mv.vertical, shape.w});
    auto& slot = fiber[q.morphism(x).index];
    if (!slot) slot = shape;
    else if (*slot != shape)
      throw TheoremViolation(Theorem::FiberInconsistent,
                             "(r, w) varies over the fiber of '" + q.graph.name(q.morphism(x)) + "'");
  }
  for (VertexId y : q.graph.vertices()) {
    const BranchShape& shape = *fiber[y.index];
    if (is_branch(shape)) p.branch_points.push_back(BranchPoint{y, shape});
  }
  p.R = ramification_number(p.branch_shapes());
  count_s_t(p);
  return p;
}

RamificationProfile summary_profile(std::size_t order, int genus, int quotient_genus,
                                    std::span<const BranchShape> shapes) {
  RamificationProfile p;
  p.order = order;
  p.genus = genus;
  p.quotient_genus = quotient_genus;
  std::uint32_t y = 0;
  for (const auto& b : shapes) {
    if (b.r == 0) throw Error(Errc::InvalidArgument, "stabilizer order r must be positive");
    if (is_branch(b)) p.branch_points.push_back(BranchPoint{VertexId{y++}, b});
  }
  p.R = ramification_number(p.branch_shapes());
  count_s_t(p);
  return p;
}

RiemannHurwitzTerms riemann_hurwitz_terms(const RamificationProfile& p) {
  RiemannHurwitzTerms t;
  const auto order = static_cast<std::int64_t>(p.order);
  t.lhs = 2 * std::int64_t{p.genus} - 2;
  t.vertex_sum = order * (2 * std::int64_t{p.quotient_genus} - 2);
  for (const auto& x : p.vertices)
    t.vertex_sum += 2 * (static_cast<std::int64_t>(x.m) - 1) + static_cast<std::int64_t>(x.v);
  t.branch_form = Rational(order) * (Rational(2 * std::int64_t{p.quotient_genus} - 2) + p.R);
  return t;
}

bool verify_riemann_hurwitz(const RamificationProfile& p) {
  const auto t = riemann_hurwitz_terms(p);
  if (!p.vertices.empty() && t.vertex_sum != t.lhs) return false;
  if (p.R != ramification_number(p.branch_shapes())) return false;
  return t.branch_form == Rational(t.lhs);
}

std::string BranchCase::tag() const {
  switch (kind) {
    case BranchKind::Unramified: return "R0_UNRAMIFIED";
    case BranchKind::LowHorizontal: return "RLT2_HORIZONTAL(" + std::to_string(r) + ")";
    case BranchKind::LowVertical: return "RLT2_VERTICAL";
    case BranchKind::Two: return "REQ2_CASE(" + variant + ")";
    case BranchKind::SevenThirds: return "RGT2_MIN(" + variant + ")";
    case BranchKind::High: return "RGT2_OTHER";
  }
  return "?";
}

BranchCase classify_branch_locus(std::span<const BranchShape> shapes) {
  std::vector<BranchShape> pts;
  for (const auto& b : shapes)
    if (is_branch(b)) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  BranchCase c;
  c.R = ramification_number(pts);

  auto gap = [&]() -> TheoremViolation {
    std::string list;
    for (const auto& b : pts)
      list += "(" + std::to_string(b.r) + "," + std::to_string(b.w) + ")";
    return TheoremViolation(Theorem::ClassificationGap,
                            "branch locus " + list + " with R=" + c.R.to_string() + " fits no case");
  };
  auto is = [&](std::initializer_list<BranchShape> want) {
    return std::equal(pts.begin(), pts.end(), want.begin(), want.end());
  };

  const Rational two(2), seven_thirds(7, 3);
  if (pts.empty()) {
    c.kind = BranchKind::Unramified;
  } else if (c.R < two) {
    if (pts.size() != 1) throw gap();
    if (pts[0].r >= 2 && pts[0].w == 0) {
      c.kind = BranchKind::LowHorizontal;
      c.r = pts[0].r;
    } else if (is({{1, 1}})) {
      c.kind = BranchKind::LowVertical;
    } else {
      throw gap();
    }
  } else if (c.R == two) {
    c.kind = BranchKind::Two;
    if (is({{2, 1}}) || is({{1, 2}})) c.variant = "i";
    else if (is({{2, 0}, {2, 0}})) c.variant = "iia";
    else if (is({{1, 1}, {1, 1}})) c.variant = "iib";
    else if (is({{1, 1}, {2, 0}})) c.variant = "iic";
    else throw gap();
  } else if (c.R < seven_thirds) {
    throw gap();
  } else if (c.R == seven_thirds) {
    c.kind = BranchKind::SevenThirds;
    if (is({{3, 1}})) c.variant = "i";
    else if (is({{2, 0}, {3, 0}})) c.variant = "ii";
    else if (is({{1, 1}, {3, 0}})) c.variant = "iii";
    else throw gap();
  } else {
    c.kind = BranchKind::High;
  }
  return c;
}

BranchCase classify_branch_locus(const RamificationProfile& p) {
  return classify_branch_locus(p.branch_shapes());
}

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool check_prime_divisor_bound(const RamificationProfile& p) {
  require_genus_two(p);
  for (std::size_t q : prime_factors(p.order))
    if (q > static_cast<std::size_t>(p.genus) + 1) return false;
  return true;
}

bool check_cyclic_unramified(const ActionGroup& c, int g1) {
  const std::size_t p = c.order();
  const int g = genus(c.graph());
  if (!is_prime(p)) throw Error(Errc::HypothesisUnmet, "|C| = " + std::to_string(p) + " is not prime");
  if (g1 <= 1) throw Error(Errc::HypothesisUnmet, "g1 must exceed 1");
  const auto pi = static_cast<std::int64_t>(p);
  if (std::int64_t{g} - 1 != pi * (std::int64_t{g1} - 1))
    throw Error(Errc::HypothesisUnmet, "g - 1 != p(g1 - 1)");
  if (pi <= std::int64_t{g1} + 1) throw Error(Errc::HypothesisUnmet, "p <= g1 + 1");
  if (!is_harmonic_action(c)) throw Error(Errc::HypothesisUnmet, "C does not act harmonically");
  return profile(c).s == 0;
}

bool check_gap_theorem(const RamificationProfile& p) {
  require_genus_two(p);
  const std::size_t lo = 4 * static_cast<std::size_t>(p.genus - 1);
  const std::size_t hi = 6 * static_cast<std::size_t>(p.genus - 1);
  if (p.order <= lo) return true;
  return p.order == hi && p.quotient_genus == 0 && p.R == Rational(7, 3);
}

bool check_hurwitz_bound(const RamificationProfile& p) {
  require_genus_two(p);
  return p.order <= 6 * static_cast<std::size_t>(p.genus - 1);
}

bool check_positive_quotient_genus_bounds(const RamificationProfile& p) {
  require_genus_two(p);
  if (p.quotient_genus < 1) return true;
  const auto g = static_cast<std::size_t>(p.genus);
  return p.R == Rational(0) ? p.order <= g - 1 : p.order <= 2 * g - 2;
}

}  // namespace harmonica

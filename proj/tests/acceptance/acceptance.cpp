// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "graphs.hpp"
#include "harmonica/census.hpp"
#include "harmonica/covers.hpp"
#include "harmonica/error.hpp"
#include "harmonica/families.hpp"
#include "oracles.hpp"

using namespace harmonica;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ActionGroup gen(const MultiGraph& g, std::vector<Automorphism> gens) { return generate_group(g, gens); }

std::vector<BranchShape> shapes(const ActionGroup& g) {
  auto s = profile(g).branch_shapes();
  std::sort(s.begin(), s.end());
  return s;
}

void barbell_reflection(Check& c) {
  auto t0 = Clock::now();
  auto b = barbell();
  auto grp = gen(b.graph, {b.horizontal_reflection});
  auto q = quotient(grp);
  c.expect(are_isomorphic(q.graph, fixtures::path(3)).has_value(), "quotient is not P3");
  c.expect(!is_harmonic(q.morphism), "quotient morphism harmonic");
  auto v = is_harmonic_action(grp);
  c.expect(!v && v.fixed_edge.has_value(), "criterion gave no fixed-edge witness");
  if (v.fixed_edge) {
    c.expect(grp.element(v.fixed_edge->element) == b.horizontal_reflection, "witness element");
    c.expect(b.graph.name(v.fixed_edge->vertex) == "b", "witness vertex");
    c.expect(b.graph.name(v.fixed_edge->edge) == "bc", "witness edge");
  }
  c.expect(seconds_since(t0) < 1.0, "slower than 1 s");
}

void barbell_involutions(Check& c) {
  auto b = barbell();
  for (const auto& inv : {b.vertical_reflection, b.half_rotation}) {
    auto grp = gen(b.graph, {inv});
    c.expect(static_cast<bool>(is_harmonic_action(grp)), "involution not harmonic");
    c.expect(genus(quotient(grp).graph) == 1, "quotient genus != 1");
  }
  auto klein = gen(b.graph, {b.vertical_reflection, b.half_rotation});
  c.expect(klein.order() == 4, "Klein order");
  c.expect(!is_harmonic_action(klein), "Klein action harmonic");
  auto subs = subgroups(klein);
  c.expect(subs.size() == 5, "subgroup count != 5");
  for (const auto& s : subs)
    c.expect(static_cast<bool>(is_harmonic_action(s)) == is_harmonic_action_by_definition(s),
             "criterion and definition disagree");
}

void figure_profiles(Check& c) {
  auto k3 = profile(klein_genus3().group);
  auto rh3 = riemann_hurwitz_terms(k3);
  c.expect(k3.branch_shapes() == std::vector<BranchShape>{{1, 1}} && k3.R == Rational(1), "genus-3 profile");
  c.expect(rh3.lhs == 4 && rh3.branch_form == Rational(4) && rh3.vertex_sum == 4, "genus-3 RH");
  auto k5 = profile(klein_genus5().group);
  auto rh5 = riemann_hurwitz_terms(k5);
  c.expect(k5.branch_shapes() == std::vector<BranchShape>{{2, 1}} && k5.R == Rational(2), "genus-5 profile");
  c.expect(rh5.lhs == 8 && rh5.branch_form == Rational(8) && rh5.vertex_sum == 8, "genus-5 RH");
  auto h = hurwitz_genus2();
  auto ph = profile(h.group);
  c.expect(ph.branch_shapes() == std::vector<BranchShape>{{3, 1}} && ph.R == Rational(7, 3), "genus-2 profile");
  c.expect(ph.order == 6 && ph.order == static_cast<std::size_t>(6 * (ph.genus - 1)), "genus-2 order");
  c.expect(are_isomorphic(quotient(h.group).graph, fixtures::path(1)).has_value(), "genus-2 quotient not P1");
  c.expect(classify_branch_locus(ph).tag() == "RGT2_MIN(i)", "genus-2 case");
  c.expect(verify_riemann_hurwitz(k3) && verify_riemann_hurwitz(k5) && verify_riemann_hurwitz(ph), "RH");
}

void genus_one_catalogue(Check& c) {
  auto d6 = decorated_cycle(6, RootedTree::single_edge());
  auto d5 = decorated_cycle(5, RootedTree::single_edge());
  auto cyc = [](const FamilyInstance& f, const char* n) {
    return generate_group(f.graph, std::vector<Automorphism>{f.automorphism(n)});
  };
  c.expect(shapes(d6.group) == std::vector<BranchShape>{{2, 1}}, "D6 shape");
  c.expect(shapes(cyc(d6, "rotation")) == std::vector<BranchShape>{{1, 2}}, "C6 shape");
  c.expect(shapes(cyc(d6, "reflection_vertex")) == std::vector<BranchShape>{{2, 0}, {2, 0}}, "vertex reflection");
  c.expect(shapes(cyc(d6, "reflection_edge")) == std::vector<BranchShape>{{1, 1}, {1, 1}}, "edge reflection");
  c.expect(shapes(cyc(d5, "reflection_vertex")) == std::vector<BranchShape>{{1, 1}, {2, 0}}, "odd reflection");
  // Every ramified subgroup lands in an R = 2 case, and together they realize all four.
  std::set<std::string> seen;
  for (const auto* f : {&d6, &d5})
    for (const auto& s : subgroups(f->group)) {
      auto p = profile(s);
      if (p.R == Rational(0)) continue;
      auto bc = classify_branch_locus(p);
      c.expect(bc.kind == BranchKind::Two, "ramified subgroup outside R = 2");
      seen.insert(bc.variant);
    }
  c.expect(seen == std::set<std::string>{"i", "iia", "iib", "iic"}, "not every R = 2 case realized");
}

void macbeath_family(Check& c) {
  for (int m = 1; m <= 3; ++m) {
    auto t0 = Clock::now();
    auto mb = macbeath(m);
    c.expect(genus(mb.graph) == m * m + 1, "genus");
    c.expect(mb.group.order() == static_cast<std::size_t>(6 * m * m), "order");
    c.expect(static_cast<bool>(is_harmonic_action(mb.group)), "not harmonic");
    c.expect(mb.profile.quotient_genus == 0 && mb.profile.R == Rational(7, 3), "profile");
    c.expect(verify_riemann_hurwitz(mb.profile), "RH");
    if (m == 3) {
      c.expect(mb.graph.vertex_count() == 72, "m=3 vertex count");
      c.expect(seconds_since(t0) < 30.0, "m=3 slower than 30 s");
    }
  }
}

void lower_bound(Check& c) {
  for (int g = 3; g <= 8; ++g) {
    auto f = lower_bound_family(g);
    c.expect(f.graph.vertex_count() == static_cast<std::size_t>(3 * (g - 1)), "vertex count");
    c.expect(f.graph.edge_count() == static_cast<std::size_t>(4 * (g - 1)), "edge count");
    c.expect(genus(f.graph) == g, "genus");
    c.expect(f.group.order() == static_cast<std::size_t>(4 * (g - 1)), "order");
    c.expect(static_cast<bool>(is_harmonic_action(f.group)), "not harmonic");
    c.expect(verify_riemann_hurwitz(profile(f.group)), "RH");
  }
}

void census(Check& c) {
  for (auto [g, v] : {std::pair{2, std::size_t{6}}, std::pair{3, std::size_t{7}}}) {
    CensusOptions opt;
    opt.genus = g;
    opt.max_vertices = v;
    opt.jobs = 2;
    auto r = run_census(opt);
    c.expect(!r.truncated, "truncated census");
    c.expect(r.violations.empty(), "violations at genus " + std::to_string(g) + ": " +
                                       (r.violations.empty() ? "" : r.violations.front().property));
    c.expect(r.definition_checks > 0, "no definition checks");
    const std::size_t lo = 4 * static_cast<std::size_t>(g - 1), hi = 6 * static_cast<std::size_t>(g - 1);
    for (const auto& rec : r.records) {
      c.expect(rec.max_order <= hi, "Hurwitz bound");
      c.expect(!(rec.max_order > lo && rec.max_order < hi), "order in the gap");
    }
    if (g == 2) c.expect(r.max_order == 6, "genus-2 maximum != 6");
    std::printf("  census g=%d |V|<=%zu: %zu graphs, %zu pairs, %zu definition checks, max %zu\n", g, v,
                r.records.size(), r.harmonic_pairs, r.definition_checks, r.max_order);
  }
}

void covers(Check& c) {
  std::mt19937 rng(8675309);
  int built = 0;
  while (built < 50) {
    const int g = 1 + static_cast<int>(rng() % 3);
    auto base = oracle::random_graph(rng, 2 + rng() % 4, static_cast<std::size_t>(g));
    const std::uint32_t m = 2 + rng() % 3;
    const std::size_t rank = 1 + rng() % static_cast<std::size_t>(g);
    AbelianGroup grp = AbelianGroup::power(m, rank);
    auto tree = spanning_tree(base);
    std::vector<std::uint32_t> volt(base.edge_count(), 0);
    std::vector<bool> in_tree(base.edge_count(), false);
    for (EdgeId e : tree) in_tree[e.index] = true;
    for (EdgeId e : base.edges())
      if (!in_tree[e.index]) volt[e.index] = static_cast<std::uint32_t>(rng() % grp.order());
    std::optional<DerivedCover> dc;
    try {
      dc.emplace(derived_cover(make_voltage_assignment(base, tree, grp, volt)));
    } catch (const Error& e) {
      c.expect(e.code() == Errc::DisconnectedCover, "unexpected cover error");
      continue;
    }
    ++built;
    c.expect(genus(dc->cover) - 1 == static_cast<int>(grp.order()) * (genus(base) - 1), "genus identity");
    c.expect(is_harmonic(dc->projection), "projection not harmonic");
    c.expect(degree(dc->projection) == grp.order(), "degree != |group|");
    for (VertexId x : dc->cover.vertices())
      c.expect(multiplicities(dc->projection, x) == Multiplicities{1, 0}, "ramified projection");
    const auto aut = automorphism_group(base, 100000);
    for (const auto& gamma : aut.elements()) {
      auto lifts = lift_automorphism(gamma, *dc);
      if (lifts.empty()) continue;
      c.expect(lifts.size() == grp.order(), "lift count");
      const auto inv = lifts.front().inverse();
      for (const auto& l : lifts) c.expect(dc->deck.contains(inv * l), "lifts are not a deck coset");
    }
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"barbell horizontal reflection", barbell_reflection},
      {"barbell involutions and Klein four", barbell_involutions},
      {"figure profiles", figure_profiles},
      {"genus-1 decorated cycles", genus_one_catalogue},
      {"Macbeath family m=1..3", macbeath_family},
      {"lower-bound family g=3..8", lower_bound},
      {"census g=2 |V|<=6, g=3 |V|<=7", census},
      {"50 random voltage covers", covers},
  };
  bool all = true;
  int i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Check c;
    auto t0 = Clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", i, name, seconds_since(t0),
                c.ok ? "" : " -- ", c.why.str().c_str());
    std::fflush(stdout);
    all = all && c.ok;
  }
  return all ? 0 : 1;
}

#include <gtest/gtest.h>

#include <random>

#include "graphs.hpp"
#include "harmonica/action.hpp"
#include "harmonica/error.hpp"
#include "harmonica/families.hpp"
#include "harmonica/ramification.hpp"
#include "oracles.hpp"

using namespace harmonica;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected harmonica::Error";
  return Errc::InvalidArgument;
}

ActionGroup generated(const MultiGraph& g, std::vector<Automorphism> gens) {
  return generate_group(g, gens);
}

ActionGroup barbell_klein() {
  auto b = barbell();
  return generated(b.graph, {b.vertical_reflection, b.half_rotation});
}

FamilyInstance hexagon() { return decorated_cycle(6, RootedTree::single_edge()); }

}  // namespace

TEST(Automorphism, BarbellHorizontalReflection) {
  auto b = barbell();
  const auto& h = b.horizontal_reflection;
  for (VertexId v : b.graph.vertices()) EXPECT_TRUE(h.fixes(v));
  EXPECT_TRUE(h.fixes(b.graph.edge("bc")));
  EXPECT_EQ(h(b.graph.edge("ab1")), b.graph.edge("ab2"));
  EXPECT_EQ(h * h, Automorphism::identity(b.graph));
}

TEST(Automorphism, ParallelClassSwapNotForced) {
  auto g = fixtures::banana(2);
  auto a = build_automorphism(g, {VertexId{1}, VertexId{0}}, {EdgeId{0}, EdgeId{1}});
  EXPECT_FALSE(a.is_identity());
  EXPECT_TRUE(a.fixes(EdgeId{0}));
}

TEST(Automorphism, Errors) {
  auto g = fixtures::path(2);
  EXPECT_EQ(code_of([&] { build_automorphism(g, {VertexId{0}, VertexId{0}, VertexId{2}}, {EdgeId{0}, EdgeId{1}}); }),
            Errc::NotBijective);
  EXPECT_EQ(code_of([&] { build_automorphism(g, {VertexId{1}, VertexId{0}, VertexId{2}}, {EdgeId{0}, EdgeId{1}}); }),
            Errc::IncidenceViolation);
  EXPECT_EQ(code_of([&] { build_automorphism(g, {VertexId{0}, VertexId{1}}, {EdgeId{0}, EdgeId{1}}); }),
            Errc::NotBijective);
}

TEST(Automorphism, InverseAndComposition) {
  auto h = hurwitz_genus2();
  const auto& s = h.automorphism("sigma");
  EXPECT_EQ(s * s.inverse(), Automorphism::identity(h.graph));
  EXPECT_EQ(s * s * s, Automorphism::identity(h.graph));
  // (a * b)(x) = a(b(x))
  const auto& t = h.automorphism("tau");
  for (VertexId v : h.graph.vertices()) EXPECT_EQ((s * t)(v), s(t(v)));
}

TEST(GenerateGroup, Examples) {
  auto h = hurwitz_genus2();
  EXPECT_EQ(generated(h.graph, {h.automorphism("sigma"), h.automorphism("tau")}).order(), 6u);
  EXPECT_EQ(generated(h.graph, {Automorphism::identity(h.graph)}).order(), 1u);
  EXPECT_EQ(generated(h.graph, {}).order(), 1u);
  EXPECT_EQ(barbell_klein().order(), 4u);
  EXPECT_TRUE(barbell_klein().contains(barbell().horizontal_reflection));
}

TEST(GenerateGroup, ClosureCap) {
  auto h = hurwitz_genus2();
  std::vector<Automorphism> gens{h.automorphism("sigma"), h.automorphism("tau")};
  EXPECT_EQ(code_of([&] { generate_group(h.graph, gens, 5); }), Errc::BudgetExceeded);
}

TEST(GroupOps, MultiplyAndIndex) {
  auto grp = hexagon().group;
  EXPECT_TRUE(grp.element(0).is_identity());
  for (std::size_t i = 0; i < grp.order(); ++i)
    for (std::size_t j = 0; j < grp.order(); ++j)
      EXPECT_EQ(grp.element(grp.multiply(i, j)), grp.element(i) * grp.element(j));
  EXPECT_EQ(code_of([&] {
              ActionGroup::from_elements(grp.graph(), {grp.element(0), grp.element(1)});
            }),
            Errc::InvalidArgument);
}

TEST(AutomorphismGroup, SmallExamples) {
  EXPECT_EQ(automorphism_group(fixtures::path(1)).order(), 2u);
  EXPECT_EQ(automorphism_group(fixtures::banana(2)).order(), 4u);
  EXPECT_EQ(automorphism_group(barbell().graph).order(), 8u);
  EXPECT_EQ(oracle::aut_order(fixtures::banana(2)), 4u);
  EXPECT_EQ(oracle::aut_order(barbell().graph), 8u);
  EXPECT_EQ(automorphism_group_order(hurwitz_genus2().graph), 2u * 6 * 6 * 6);
}

TEST(AutomorphismGroup, BudgetExceeded) {
  EXPECT_EQ(code_of([&] { automorphism_group(fixtures::banana(6), 100); }), Errc::BudgetExceeded);
  EXPECT_EQ(automorphism_group_order(fixtures::banana(6)), 1440u);
}

TEST(AutomorphismGroup, AgreesWithBruteForce) {
  std::mt19937 rng(99);
  std::vector<MultiGraph> graphs{fixtures::banana(3), fixtures::cycle(5), fixtures::path(4)};
  for (int i = 0; i < 25; ++i) graphs.push_back(oracle::random_graph(rng, 2 + rng() % 4, rng() % 3));
  for (const auto& g : graphs) {
    auto brute = oracle::aut_order(g);
    EXPECT_EQ(automorphism_group_order(g), brute);
    EXPECT_EQ(automorphism_group(g, 100000).order(), brute);
  }
}

TEST(Orbits, HurwitzGroup) {
  auto h = hurwitz_genus2();
  auto od = orbits_and_stabilizers(h.group);
  ASSERT_EQ(od.vertex_orbits.size(), 2u);
  std::vector<std::size_t> sizes{od.vertex_orbits[0].size(), od.vertex_orbits[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 6}));
  for (VertexId x : h.graph.vertices()) {
    EXPECT_EQ(od.stabilizer_order[x.index], oracle::stabilizer(h.group, x));
    bool centre = h.graph.name(x)[0] == 'C';
    EXPECT_EQ(od.stabilizer_order[x.index], centre ? 3u : 1u);
  }
}

TEST(Orbits, TrivialAndKlein) {
  auto g = barbell().graph;
  auto trivial = generated(g, {});
  EXPECT_EQ(orbits_and_stabilizers(trivial).vertex_orbits.size(), 4u);
  auto k = klein_genus3();
  auto od = orbits_and_stabilizers(k.group);
  ASSERT_EQ(od.vertex_orbits.size(), 2u);
  for (const auto& o : od.vertex_orbits) EXPECT_EQ(o.size(), 4u);
  for (auto s : od.stabilizer_order) EXPECT_EQ(s, 1u);
}

TEST(Orbits, MatchBruteForceScan) {
  for (const auto& inst : {hexagon(), lower_bound_family(5), klein_genus5()}) {
    auto od = orbits_and_stabilizers(inst.group);
    for (VertexId x : inst.graph.vertices()) {
      auto brute = oracle::orbit(inst.group, x);
      const auto& o = od.vertex_orbits[od.vertex_orbit[x.index]];
      EXPECT_EQ(o.size(), brute.size());
      for (VertexId y : o) EXPECT_TRUE(brute.count(y.index));
      EXPECT_EQ(inst.group.order(), brute.size() * oracle::stabilizer(inst.group, x));
    }
  }
}

TEST(Quotient, BarbellReflections) {
  auto b = barbell();
  auto qh = quotient(generated(b.graph, {b.horizontal_reflection}));
  EXPECT_EQ(oracle::brute_canonical(qh.graph), oracle::brute_canonical(fixtures::path(3)));
  auto qv = quotient(generated(b.graph, {b.vertical_reflection}));
  EXPECT_EQ(canonical_key(qv.graph), canonical_key(fixtures::banana(2)));
  EXPECT_EQ(genus(qv.graph), 1);
}

TEST(Quotient, TrivialGroupGivesIdentity) {
  auto g = lower_bound_family(3).graph;
  auto q = quotient(generated(g, {}));
  EXPECT_EQ(q.graph, g);
  EXPECT_EQ(q.morphism, GraphMorphism::identity(g));
}

TEST(Criterion, BarbellHorizontalReflection) {
  auto b = barbell();
  auto grp = generated(b.graph, {b.horizontal_reflection});
  auto verdict = is_harmonic_action(grp);
  EXPECT_FALSE(verdict);
  ASSERT_TRUE(verdict.fixed_edge);
  EXPECT_EQ(grp.element(verdict.fixed_edge->element), b.horizontal_reflection);
  EXPECT_EQ(b.graph.name(verdict.fixed_edge->vertex), "b");
  EXPECT_EQ(b.graph.name(verdict.fixed_edge->edge), "bc");
}

TEST(Criterion, Examples) {
  EXPECT_TRUE(is_harmonic_action(hurwitz_genus2().group));
  EXPECT_FALSE(is_harmonic_action(barbell_klein()));
  auto b = barbell();
  EXPECT_TRUE(is_harmonic_action(generated(b.graph, {b.vertical_reflection})));
  EXPECT_TRUE(is_harmonic_action(generated(b.graph, {b.half_rotation})));
}

TEST(Criterion, DegenerateWitness) {
  // Swapping the ends of a single edge collapses the whole neighbourhood.
  auto g = fixtures::path(1);
  auto swap = build_automorphism(g, {VertexId{1}, VertexId{0}}, {EdgeId{0}});
  auto verdict = is_harmonic_action(generated(g, {swap}));
  EXPECT_FALSE(verdict);
  EXPECT_TRUE(verdict.degenerate_vertex);
}

TEST(Definition, Examples) {
  EXPECT_FALSE(is_harmonic_action_by_definition(barbell_klein()));
  auto hex = hexagon();
  auto rotations = generated(hex.graph, {hex.automorphism("rotation")});
  EXPECT_EQ(rotations.order(), 6u);
  EXPECT_TRUE(is_harmonic_action_by_definition(rotations));
  EXPECT_TRUE(is_harmonic_action_by_definition(generated(hex.graph, {})));
  EXPECT_EQ(code_of([&] { is_harmonic_action_by_definition(hex.group, 8); }), Errc::BudgetExceeded);
}

TEST(Subgroups, CountsMatchBruteForce) {
  auto hex = hexagon();
  EXPECT_EQ(hex.group.order(), 12u);
  EXPECT_EQ(subgroups(barbell_klein()).size(), 5u);
  EXPECT_EQ(subgroups(generated(hex.graph, {hex.automorphism("rotation")})).size(), 4u);
  EXPECT_EQ(subgroups(hex.group).size(), 16u);
  EXPECT_EQ(oracle::subgroup_count(hex.group), 16u);
  EXPECT_EQ(oracle::subgroup_count(barbell_klein()), 5u);
  auto lb = lower_bound_family(3).group;
  EXPECT_EQ(subgroups(lb).size(), oracle::subgroup_count(lb));
  auto sizes = subgroups(hex.group);
  for (std::size_t i = 1; i < sizes.size(); ++i) EXPECT_LE(sizes[i - 1].order(), sizes[i].order());
}

TEST(Subgroups, CyclicSubgroups) {
  auto hex = hexagon();
  auto cyc = cyclic_subgroups(hex.group);
  EXPECT_EQ(cyc.front().order(), 1u);
  // D6: trivial, C2 (rotation by 3), C3, C6 and six reflections.
  EXPECT_EQ(cyc.size(), 10u);
}

TEST(Properties, CriterionEqualsDefinitionOnEverySubgroup) {
  std::vector<ActionGroup> groups{barbell_klein(), hexagon().group, hurwitz_genus2().group,
                                  klein_genus3().group, klein_genus5().group,
                                  decorated_cycle(5, RootedTree::single_edge()).group,
                                  automorphism_group(barbell().graph),
                                  automorphism_group(fixtures::banana(3))};
  for (const auto& grp : groups)
    for (const auto& sub : subgroups(grp))
      EXPECT_EQ(static_cast<bool>(is_harmonic_action(sub)), is_harmonic_action_by_definition(sub));
}

TEST(Properties, HarmonicityPassesToSubgroups) {
  for (const auto& inst : {hurwitz_genus2(), lower_bound_family(4), hexagon()}) {
    ASSERT_TRUE(is_harmonic_action(inst.group));
    for (const auto& sub : subgroups(inst.group)) EXPECT_TRUE(is_harmonic_action(sub));
  }
}

TEST(Properties, QuotientMorphismInvariants) {
  for (const auto& inst : {hurwitz_genus2(), lower_bound_family(3), hexagon(), klein_genus5()}) {
    for (const auto& sub : subgroups(inst.group)) {
      auto q = quotient(sub);
      EXPECT_TRUE(is_connected(q.graph));
      EXPECT_EQ(degree(q.morphism), sub.order());
      auto od = orbits_and_stabilizers(sub);
      for (VertexId x : inst.graph.vertices()) {
        auto m = multiplicities(q.morphism, x);
        EXPECT_EQ(m.horizontal, od.stabilizer_order[x.index]);
        EXPECT_EQ(m.vertical % m.horizontal, 0u);
      }
    }
  }
}

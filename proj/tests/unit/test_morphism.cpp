#include <gtest/gtest.h>

#include "graphs.hpp"
#include "harmonica/action.hpp"
#include "harmonica/error.hpp"
#include "harmonica/families.hpp"
#include "harmonica/morphism.hpp"
#include "oracles.hpp"

using namespace harmonica;

namespace {

MultiGraph p3() {
  return build_graph(std::vector<std::string>{"a", "b", "c", "d"},
                     std::vector<EdgeSpec>{{"ab", "a", "b"}, {"bc", "b", "c"}, {"cd", "c", "d"}});
}

// Barbell folded onto P3 by identifying the parallel edges, written out by hand.
GraphMorphism folded_barbell() {
  auto g = barbell().graph;
  auto t = p3();
  std::vector<VertexId> vm{t.vertex("a"), t.vertex("b"), t.vertex("c"), t.vertex("d")};
  std::vector<EdgeImage> em{t.edge("ab"), t.edge("ab"), t.edge("bc"), t.edge("cd"), t.edge("cd")};
  return build_morphism(g, t, vm, em);
}

GraphMorphism constant_edge() {
  auto src = fixtures::path(1);
  auto dot = build_graph(std::vector<std::string>{"pt"}, std::vector<EdgeSpec>{});
  return build_morphism(src, dot, {VertexId{0}, VertexId{0}}, {EdgeImage::collapsed()});
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected harmonica::Error";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(BuildMorphism, FoldedBarbellIsValid) {
  auto phi = folded_barbell();
  EXPECT_EQ(phi.target().vertex_count(), 4u);
  EXPECT_FALSE(phi.is_vertical(EdgeId{2}));
}

TEST(BuildMorphism, IdentityIsValid) {
  auto g = hurwitz_genus2().graph;
  auto id = GraphMorphism::identity(g);
  for (VertexId v : g.vertices()) EXPECT_EQ(id(v), v);
}

TEST(BuildMorphism, Errors) {
  auto g = barbell().graph;
  auto t = p3();
  std::vector<VertexId> vm{t.vertex("a"), t.vertex("b"), t.vertex("c"), t.vertex("d")};
  std::vector<EdgeImage> bad{t.edge("cd"), t.edge("ab"), t.edge("bc"), t.edge("cd"), t.edge("cd")};
  EXPECT_EQ(code_of([&] { build_morphism(g, t, vm, bad); }), Errc::NotAMorphism);
  std::vector<EdgeImage> collapsed{EdgeImage::collapsed(), t.edge("ab"), t.edge("bc"), t.edge("cd"),
                                   t.edge("cd")};
  EXPECT_EQ(code_of([&] { build_morphism(g, t, vm, collapsed); }), Errc::EndpointMismatch);
  std::vector<VertexId> outside{VertexId{9}, VertexId{0}, VertexId{1}, VertexId{2}};
  std::vector<EdgeImage> ok{t.edge("ab"), t.edge("ab"), t.edge("bc"), t.edge("cd"), t.edge("cd")};
  EXPECT_EQ(code_of([&] { build_morphism(g, t, outside, ok); }), Errc::NotAMorphism);
  EXPECT_EQ(code_of([&] { build_morphism(g, t, {VertexId{0}}, ok); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([&] { EdgeImage::collapsed().edge(); }), Errc::InvalidArgument);
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(is_nondegenerate(folded_barbell()));
  EXPECT_TRUE(is_nondegenerate(GraphMorphism::identity(barbell().graph)));
  EXPECT_FALSE(is_nondegenerate(constant_edge()));
}

TEST(Harmonic, FoldedBarbellFailsAtInnerVertex) {
  auto phi = folded_barbell();
  EXPECT_FALSE(is_harmonic(phi));
  auto f = harmonicity_failure(phi);
  ASSERT_TRUE(f);
  const auto& g = phi.source();
  EXPECT_TRUE(g.name(f->vertex) == "b" || g.name(f->vertex) == "c");
  EXPECT_NE(f->first_count, f->second_count);
  EXPECT_TRUE(is_harmonic_at(phi, g.vertex("a")));
  EXPECT_FALSE(is_harmonic_at(phi, g.vertex("b")));
}

TEST(Harmonic, IdentityAndKleinQuotient) {
  EXPECT_TRUE(is_harmonic(GraphMorphism::identity(barbell().graph)));
  auto k = klein_genus3();
  EXPECT_TRUE(is_harmonic(quotient(k.group).morphism));
}

TEST(Multiplicities, KleinGenus3) {
  auto k = klein_genus3();
  auto phi = quotient(k.group).morphism;
  for (VertexId x : k.graph.vertices()) {
    const auto& n = k.graph.name(x);
    bool carries_vertical = n == "u1" || n == "u3" || n == "l1" || n == "l3";
    EXPECT_EQ(multiplicities(phi, x), (Multiplicities{1, carries_vertical ? 1u : 0u})) << n;
  }
}

TEST(Multiplicities, KleinGenus5DegreeSixVertex) {
  auto k = klein_genus5();
  auto phi = quotient(k.group).morphism;
  for (const char* n : {"2", "4"}) EXPECT_EQ(multiplicities(phi, k.graph.vertex(n)), (Multiplicities{2, 2}));
}

TEST(Multiplicities, IdentityAndErrors) {
  auto g = barbell().graph;
  auto id = GraphMorphism::identity(g);
  for (VertexId x : g.vertices()) EXPECT_EQ(multiplicities(id, x), (Multiplicities{1, 0}));
  EXPECT_EQ(code_of([&] { multiplicities(folded_barbell(), g.vertex("b")); }), Errc::NotHarmonicAt);
  EXPECT_EQ(code_of([&] { multiplicities(constant_edge(), VertexId{0}); }), Errc::DegenerateAt);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(quotient(klein_genus3().group).morphism), 4u);
  EXPECT_EQ(degree(GraphMorphism::identity(barbell().graph)), 1u);
  auto h = hurwitz_genus2();
  auto q = quotient(h.group);
  EXPECT_EQ(q.graph.edge_count(), 1u);
  EXPECT_EQ(degree(q.morphism), 6u);
  EXPECT_EQ(code_of([&] { degree(folded_barbell()); }), Errc::NotHarmonic);
  EXPECT_EQ(code_of([&] { degree(constant_edge()); }), Errc::ConstantMorphism);
}

TEST(Compose, IdentityLaws) {
  auto phi = folded_barbell();
  EXPECT_EQ(compose(phi, GraphMorphism::identity(phi.source())), phi);
  EXPECT_EQ(compose(GraphMorphism::identity(phi.target()), phi), phi);
  EXPECT_EQ(code_of([&] { compose(phi, phi); }), Errc::SourceTargetMismatch);
}

TEST(Compose, TowerFactorsDirectQuotient) {
  for (const auto& inst : {hurwitz_genus2(), lower_bound_family(3), klein_genus5()}) {
    const auto direct = quotient(inst.group);
    for (const auto& sub : subgroups(inst.group)) {
      auto composite = compose(tower_morphism(sub, inst.group), quotient(sub).morphism);
      ASSERT_TRUE(are_isomorphic(composite.target(), direct.graph)) << inst.name;
      // The composite identifies exactly the Γ-orbits.
      for (VertexId x : inst.graph.vertices()) {
        auto orb = oracle::orbit(inst.group, x);
        for (VertexId y : inst.graph.vertices())
          EXPECT_EQ(composite(x) == composite(y), orb.count(y.index) == 1) << inst.name;
      }
      EXPECT_TRUE(is_harmonic(composite)) << inst.name;
      EXPECT_EQ(degree(composite), inst.group.order());
    }
  }
}

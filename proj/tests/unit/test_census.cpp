#include <gtest/gtest.h>

#include <set>

#include "graphs.hpp"
#include "harmonica/census.hpp"
#include "harmonica/error.hpp"
#include "harmonica/families.hpp"
#include "harmonica/io.hpp"
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

std::size_t max_multiplicity(const MultiGraph& g) {
  std::size_t m = 0;
  for (VertexId u : g.vertices())
    for (const auto& a : g.adjacent(u)) m = std::max(m, a.edges.size());
  return m;
}

// Largest harmonic subgroup by scanning every subgroup with the criterion.
std::size_t scan_max(const MultiGraph& g) {
  std::size_t best = 1;
  for (const auto& sub : subgroups(automorphism_group(g, 100000), 100000))
    if (is_harmonic_action(sub)) best = std::max(best, sub.order());
  return best;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  auto trees = enumerate_graphs(0, 4);
  EXPECT_EQ(trees.size(), 4u);
  auto g1 = enumerate_graphs(1, 2);
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(canonical_key(g1[0]), canonical_key(fixtures::banana(2)));
  auto g2 = enumerate_graphs(2, 2);
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_EQ(canonical_key(g2[0]), canonical_key(fixtures::banana(3)));
}

TEST(Enumerate, NamingAndOrder) {
  auto gs = enumerate_graphs(2, 5);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_EQ(gs[i].name(VertexId{0}), "v0");
    EXPECT_EQ(genus(gs[i]), 2);
    if (i > 0) {
      auto prev = std::make_pair(gs[i - 1].vertex_count(), canonical_key(gs[i - 1]));
      auto cur = std::make_pair(gs[i].vertex_count(), canonical_key(gs[i]));
      EXPECT_LT(prev, cur);
    }
  }
}

TEST(Enumerate, NoDuplicates) {
  for (auto [g, v] : {std::pair{2, 6}, std::pair{3, 5}, std::pair{1, 6}}) {
    std::set<std::string> keys, brute;
    auto gs = enumerate_graphs(g, v);
    for (const auto& x : gs) keys.insert(canonical_key(x));
    EXPECT_EQ(keys.size(), gs.size());
    for (const auto& x : gs)
      if (x.vertex_count() <= 6) brute.insert(oracle::brute_canonical(x));
    std::size_t small = 0;
    for (const auto& x : gs) small += x.vertex_count() <= 6;
    EXPECT_EQ(brute.size(), small);
  }
}

TEST(Enumerate, MatchesBruteForceGeneration) {
  for (int g = 0; g <= 4; ++g) {
    std::set<std::string> expected;
    for (std::size_t n = 2; n <= 4; ++n) {
      auto part = oracle::all_multigraphs(n, 3, g);
      expected.insert(part.begin(), part.end());
    }
    std::set<std::string> got;
    for (const auto& x : enumerate_graphs(g, 4))
      if (max_multiplicity(x) <= 3) got.insert(oracle::brute_canonical(x));
    EXPECT_EQ(got, expected) << "genus " << g;
  }
}

TEST(Enumerate, StreamingStopsEarly) {
  std::size_t seen = 0;
  for_each_graph(2, 6, [&](const MultiGraph&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(code_of([] { enumerate_graphs(-1, 3); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { enumerate_graphs(1, 13); }), Errc::InvalidArgument);
}

TEST(MaxHarmonic, HurwitzGraph) {
  auto h = hurwitz_genus2().graph;
  auto best = max_harmonic_order(h);
  EXPECT_EQ(best.order, 6u);
  EXPECT_EQ(best.witness.order(), 6u);
  EXPECT_TRUE(is_harmonic_action(best.witness));
  EXPECT_EQ(scan_max(h), 6u);
}

TEST(MaxHarmonic, TripleEdge) {
  // Any group swapping the two vertices collapses the whole graph to a point,
  // so only the 3-cycle on the parallel edges survives.
  auto g = fixtures::banana(3);
  EXPECT_EQ(automorphism_group_order(g), 12u);
  EXPECT_EQ(max_harmonic_order(g).order, 3u);
  EXPECT_EQ(scan_max(g), 3u);
  auto aut = automorphism_group(g);
  std::size_t cyclic_six = 0;
  for (const auto& sub : cyclic_subgroups(aut))
    if (sub.order() == 6) {
      ++cyclic_six;
      EXPECT_FALSE(is_harmonic_action(sub));
      EXPECT_FALSE(is_harmonic_action_by_definition(sub));
    }
  EXPECT_EQ(cyclic_six, 1u);
}

TEST(MaxHarmonic, AgreesWithSubgroupScan) {
  for (const auto& g : enumerate_graphs(2, 5)) {
    if (automorphism_group_order(g) > 200) continue;
    EXPECT_EQ(max_harmonic_order(g).order, scan_max(g));
  }
}

TEST(MaxHarmonic, HarmonicSubgroupsMatchFilter) {
  for (const auto& inst : {decorated_cycle(6, RootedTree::single_edge()), lower_bound_family(3)}) {
    std::size_t filtered = 0;
    for (const auto& sub : subgroups(inst.group)) filtered += static_cast<bool>(is_harmonic_action(sub));
    EXPECT_EQ(harmonic_subgroups(inst.group).size(), filtered);
  }
  auto b = barbell();
  auto aut = automorphism_group(b.graph);
  std::size_t filtered = 0;
  for (const auto& sub : subgroups(aut)) filtered += static_cast<bool>(is_harmonic_action(sub));
  EXPECT_EQ(harmonic_subgroups(aut).size(), filtered);
}

TEST(MaxHarmonic, AtLeastFamilyWitness) {
  std::vector<FamilyInstance> all{klein_genus3(), klein_genus5(), hurwitz_genus2(), lower_bound_family(3),
                                  tree_star(RootedTree::single_edge(), GroupTable::cyclic(5)),
                                  tree_star(RootedTree::path(2), GroupTable::klein_four())};
  for (const auto& inst : all) EXPECT_GE(max_harmonic_order(inst.graph).order, inst.group.order()) << inst.name;
}

TEST(MaxHarmonic, Budget) {
  EXPECT_EQ(code_of([] { max_harmonic_order(fixtures::banana(6), 100); }), Errc::BudgetExceeded);
}

TEST(Census, GenusTwo) {
  CensusOptions opt;
  opt.genus = 2;
  opt.max_vertices = 6;
  auto r = run_census(opt);
  EXPECT_EQ(r.records.size(), enumerate_graphs(2, 6).size());
  EXPECT_EQ(r.max_order, 6u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_FALSE(r.truncated);
  EXPECT_GT(r.harmonic_pairs, r.records.size());
  EXPECT_GT(r.definition_checks, 0u);
  for (const auto& rec : r.records) {
    EXPECT_LE(rec.max_order, 6u);
    EXPECT_FALSE(rec.max_order > 4 && rec.max_order < 6);
    if (rec.witness_profile) EXPECT_EQ(rec.witness_profile->order, rec.max_order);
  }
}

TEST(Census, GenusThreeSmall) {
  CensusOptions opt;
  opt.genus = 3;
  opt.max_vertices = 6;
  opt.jobs = 2;
  auto r = run_census(opt);
  EXPECT_TRUE(r.violations.empty());
  for (const auto& rec : r.records) {
    EXPECT_LE(rec.max_order, 12u);
    EXPECT_FALSE(rec.max_order > 8 && rec.max_order < 12);
  }
}

TEST(Census, GenusOneIsFlagged) {
  CensusOptions opt;
  opt.genus = 1;
  opt.max_vertices = 5;
  auto r = run_census(opt);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_TRUE(r.violations.empty());
}

TEST(Census, DeterministicAcrossJobs) {
  CensusOptions a;
  a.genus = 2;
  a.max_vertices = 5;
  auto b = a;
  b.jobs = 3;
  EXPECT_EQ(serialize_census(run_census(a)), serialize_census(run_census(b)));
}

TEST(Census, Truncation) {
  CensusOptions opt;
  opt.genus = 2;
  opt.max_vertices = 4;
  opt.aut_budget = 10;
  auto r = run_census(opt);
  EXPECT_TRUE(r.truncated);
  std::size_t truncated = 0;
  for (const auto& rec : r.records) truncated += rec.truncated;
  EXPECT_GT(truncated, 0u);
}

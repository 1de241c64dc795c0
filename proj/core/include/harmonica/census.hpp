#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/ramification.hpp"

namespace harmonica {

/// Every connected loopless multigraph of genus g with 2 <= |V| <= v_max, one
/// per isomorphism class, ordered by (|V|, canonical key). Vertices are
/// named v0, v1, ... in canonical order. Throws Error(InvalidArgument) for
/// g < 0 or v_max > 12.
std::vector<MultiGraph> enumerate_graphs(int g, std::size_t v_max);

/// Streaming form; `visit` returning false stops the enumeration.
void for_each_graph(int g, std::size_t v_max, const std::function<bool(const MultiGraph&)>& visit);

/// All harmonic subgroups of `group` (trivial included), ordered by order
/// then by element indices.
std::vector<ActionGroup> harmonic_subgroups(const ActionGroup& group);

struct MaxHarmonic {
  std::size_t order = 1;
  ActionGroup witness;
};

/// Largest harmonic subgroup of Aut(G). Throws Error(BudgetExceeded) when
/// |Aut(G)| > budget.
MaxHarmonic max_harmonic_order(const MultiGraph& g, std::size_t budget = 100000);

struct CensusOptions {
  int genus = 2;
  std::size_t max_vertices = 6;
  std::size_t jobs = 1;
  std::size_t aut_budget = 100000;         // largest Aut(G) searched
  std::size_t definition_budget = kDefaultGroupBudget;  // largest group checked by definition
};

struct CensusRecord {
  MultiGraph graph;
  std::string key;  // canonical key, hex
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t aut_order = 0;
  bool truncated = false;  // Aut(G) over budget; not searched
  std::size_t harmonic_subgroups = 0;
  std::size_t max_order = 0;
  std::vector<Automorphism> witness_generators;
  std::optional<RamificationProfile> witness_profile;
  std::string witness_case;  // branch-case tag
};

struct CensusViolation {
  std::string key;
  std::size_t order = 0;
  std::string property;
  std::string detail;
};

struct CensusReport {
  int genus = 0;
  std::size_t max_vertices = 0;
  std::vector<CensusRecord> records;
  std::size_t max_order = 0;
  std::size_t harmonic_pairs = 0;    // (G, Γ) pairs checked
  std::size_t definition_checks = 0;
  std::vector<CensusViolation> violations;
  bool truncated = false;
  std::vector<std::string> notes;
};

/// Enumerates, searches every graph for harmonic subgroups of Aut(G) and
/// checks each harmonic pair against the bound and classification results.
/// Graphs whose Aut(G) exceeds the budget are listed as truncated.
CensusReport run_census(const CensusOptions& options);

}  // namespace harmonica

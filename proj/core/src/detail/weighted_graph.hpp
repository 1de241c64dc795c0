#pragma once

// Simple graphs with positive integer edge weights (the multiplicity-labelled
// support of a multigraph) and the partition-refinement searches run on them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmonica/multigraph.hpp"

namespace harmonica::detail {

struct WeightedGraph {
  // adj[v] = (neighbour, multiplicity), sorted by neighbour.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;

  std::size_t size() const noexcept { return adj.size(); }
  std::uint32_t weight(std::uint32_t u, std::uint32_t v) const;

  static WeightedGraph from(const MultiGraph& g);
  /// Row-major symmetric n x n multiplicity matrix with zero diagonal.
  static WeightedGraph from_matrix(std::size_t n, std::span<const std::uint8_t> matrix);
};

/// Coarsest equitable refinement of `colors`. The returned colours are ranks
/// of label-independent signatures, so isomorphic inputs get matching colours,
/// and the order of the input colours is preserved.
std::vector<std::uint32_t> refine(const WeightedGraph& g, std::vector<std::uint32_t> colors);

struct CanonicalForm {
  std::string certificate;
  std::vector<std::uint32_t> position;  // position[v] = canonical index of v
};

CanonicalForm canonical_form(const WeightedGraph& g);

/// Vertex bijection a -> b preserving all weights, if any.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const WeightedGraph& a,
                                                           const WeightedGraph& b);

/// Calls `visit` with every weight-preserving vertex permutation of g, stopping
/// early when it returns false.
void for_each_automorphism(const WeightedGraph& g,
                           const std::function<bool(std::span<const std::uint32_t>)>& visit);

}  // namespace harmonica::detail

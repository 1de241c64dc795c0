#pragma once

#include <optional>
#include <vector>

#include "harmonica/multigraph.hpp"

namespace harmonica {

/// Image of an edge under a morphism: either a target edge or COLLAPSED
/// (the edge is vertical).
class EdgeImage {
 public:
  constexpr EdgeImage(EdgeId e) noexcept : edge_(e), collapsed_(false) {}  // NOLINT

  static constexpr EdgeImage collapsed() noexcept { return EdgeImage(); }

  constexpr bool is_collapsed() const noexcept { return collapsed_; }
  EdgeId edge() const;  // throws InvalidArgument when collapsed

  friend constexpr bool operator==(const EdgeImage&, const EdgeImage&) = default;

 private:
  constexpr EdgeImage() noexcept : edge_{}, collapsed_(true) {}
  EdgeId edge_;
  bool collapsed_;
};

/// Validated graph morphism G -> G'. Each edge goes to an edge joining the
/// images of its ends, or is collapsed onto the common image of its ends.
class GraphMorphism {
 public:
  /// Throws Error(InvalidArgument | NotAMorphism | EndpointMismatch).
  GraphMorphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertex_map,
                std::vector<EdgeImage> edge_map);

  static GraphMorphism identity(const MultiGraph& g);

  const MultiGraph& source() const noexcept { return source_; }
  const MultiGraph& target() const noexcept { return target_; }

  VertexId operator()(VertexId v) const { return vertex_map_.at(v.index); }
  EdgeImage operator()(EdgeId e) const { return edge_map_.at(e.index); }

  const std::vector<VertexId>& vertex_map() const noexcept { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const noexcept { return edge_map_; }

  bool is_vertical(EdgeId e) const { return edge_map_.at(e.index).is_collapsed(); }

  /// Target has no edges: every edge is vertical.
  bool is_constant() const noexcept { return target_.edge_count() == 0; }

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

 private:
  MultiGraph source_;
  MultiGraph target_;
  std::vector<VertexId> vertex_map_;
  std::vector<EdgeImage> edge_map_;
};

GraphMorphism build_morphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertex_map,
                             std::vector<EdgeImage> edge_map);

bool is_nondegenerate_at(const GraphMorphism& phi, VertexId x);
bool is_nondegenerate(const GraphMorphism& phi);

/// A vertex where |phi^{-1}(e') ∩ x(1)| varies with e', with two target edges
/// that disagree.
struct HarmonicityFailure {
  VertexId vertex;
  EdgeId first_edge;
  std::size_t first_count;
  EdgeId second_edge;
  std::size_t second_count;
};

std::optional<HarmonicityFailure> harmonicity_failure(const GraphMorphism& phi);
bool is_harmonic_at(const GraphMorphism& phi, VertexId x);
bool is_harmonic(const GraphMorphism& phi);

struct Multiplicities {
  std::size_t horizontal;  // m(x)
  std::size_t vertical;    // v(x)
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// Throws Error(NotHarmonicAt | DegenerateAt).
Multiplicities multiplicities(const GraphMorphism& phi, VertexId x);

/// Number of preimages of any target edge. Throws Error(NotHarmonic |
/// ConstantMorphism); TheoremViolation if the count is not constant.
std::size_t degree(const GraphMorphism& phi);

/// psi ∘ phi. Throws Error(SourceTargetMismatch).
GraphMorphism compose(const GraphMorphism& psi, const GraphMorphism& phi);

}  // namespace harmonica

#include "harmonica/morphism.hpp"

#include <algorithm>

#include "harmonica/error.hpp"

namespace harmonica {

EdgeId EdgeImage::edge() const {
  if (collapsed_) throw Error(Errc::InvalidArgument, "edge image is COLLAPSED");
  return edge_;
}

GraphMorphism::GraphMorphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertex_map,
                             std::vector<EdgeImage> edge_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (vertex_map_.size() != source_.vertex_count() || edge_map_.size() != source_.edge_count())
    throw Error(Errc::InvalidArgument, "morphism maps must be total on the source");
  for (VertexId y : vertex_map_)
    if (y.index >= target_.vertex_count())
      throw Error(Errc::NotAMorphism, "vertex image outside the target");
  for (EdgeId e : source_.edges()) {
    auto [x, y] = source_.ends(e);
    VertexId fx = vertex_map_[x.index];
    VertexId fy = vertex_map_[y.index];
    const EdgeImage& img = edge_map_[e.index];
    if (img.is_collapsed()) {
      if (fx != fy)
        throw Error(Errc::EndpointMismatch, "edge '" + source_.name(e) +
                                                "' is collapsed but its ends map to distinct vertices");
      continue;
    }
    EdgeId f = img.edge();
    if (f.index >= target_.edge_count())
      throw Error(Errc::NotAMorphism, "edge image outside the target");
    auto [a, b] = target_.ends(f);
    if (!((a == fx && b == fy) || (a == fy && b == fx)))
      throw Error(Errc::NotAMorphism, "edge '" + source_.name(e) + "' maps to '" + target_.name(f) +
                                          "' whose ends are not the images of its ends");
  }
}

GraphMorphism GraphMorphism::identity(const MultiGraph& g) {
  std::vector<EdgeImage> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e : g.edges()) edges.emplace_back(e);
  return GraphMorphism(g, g, g.vertices(), std::move(edges));
}

GraphMorphism build_morphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertex_map,
                             std::vector<EdgeImage> edge_map) {
  return GraphMorphism(std::move(source), std::move(target), std::move(vertex_map),
                       std::move(edge_map));
}

bool is_nondegenerate_at(const GraphMorphism& phi, VertexId x) {
  for (EdgeId e : phi.source().incident_edges(x))
    if (!phi.is_vertical(e)) return true;
  return false;
}

bool is_nondegenerate(const GraphMorphism& phi) {
  for (VertexId x : phi.source().vertices())
    if (!is_nondegenerate_at(phi, x)) return false;
  return true;
}

namespace {

// Preimage counts at x for each edge at phi(x), in incidence order.
std::vector<std::size_t> local_counts(const GraphMorphism& phi, VertexId x) {
  auto around = phi.target().incident_edges(phi(x));
  std::vector<std::size_t> counts(around.size(), 0);
  for (EdgeId e : phi.source().incident_edges(x)) {
    EdgeImage img = phi(e);
    if (img.is_collapsed()) continue;
    auto it = std::find(around.begin(), around.end(), img.edge());
    ++counts[static_cast<std::size_t>(it - around.begin())];
  }
  return counts;
}

std::optional<HarmonicityFailure> failure_at(const GraphMorphism& phi, VertexId x) {
  auto counts = local_counts(phi, x);
  auto around = phi.target().incident_edges(phi(x));
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != counts[0]) return HarmonicityFailure{x, around[0], counts[0], around[i], counts[i]};
  return std::nullopt;
}

}  // namespace

std::optional<HarmonicityFailure> harmonicity_failure(const GraphMorphism& phi) {
  for (VertexId x : phi.source().vertices())
    if (auto f = failure_at(phi, x)) return f;
  return std::nullopt;
}

bool is_harmonic_at(const GraphMorphism& phi, VertexId x) { return !failure_at(phi, x); }

bool is_harmonic(const GraphMorphism& phi) { return !harmonicity_failure(phi); }

Multiplicities multiplicities(const GraphMorphism& phi, VertexId x) {
  if (!is_harmonic_at(phi, x))
    throw Error(Errc::NotHarmonicAt, "morphism is not harmonic at '" + phi.source().name(x) + "'");
  if (!is_nondegenerate_at(phi, x))
    throw Error(Errc::DegenerateAt, "morphism is degenerate at '" + phi.source().name(x) + "'");
  std::size_t vertical = 0;
  for (EdgeId e : phi.source().incident_edges(x))
    if (phi.is_vertical(e)) ++vertical;
  return Multiplicities{local_counts(phi, x).front(), vertical};
}

std::size_t degree(const GraphMorphism& phi) {
  if (phi.is_constant()) throw Error(Errc::ConstantMorphism, "degree of a constant morphism");
  if (!is_harmonic(phi)) throw Error(Errc::NotHarmonic, "degree requires a harmonic morphism");
  std::vector<std::size_t> preimages(phi.target().edge_count(), 0);
  for (const EdgeImage& img : phi.edge_map())
    if (!img.is_collapsed()) ++preimages[img.edge().index];
  for (std::size_t c : preimages)
    if (c != preimages.front())
      throw TheoremViolation(Theorem::NonconstantPreimageCount,
                             "harmonic morphism with varying edge preimage counts");
  return preimages.front();
}

GraphMorphism compose(const GraphMorphism& psi, const GraphMorphism& phi) {
  if (!(phi.target() == psi.source()))
    throw Error(Errc::SourceTargetMismatch, "compose: target of phi is not the source of psi");
  std::vector<VertexId> vmap;
  vmap.reserve(phi.source().vertex_count());
  for (VertexId v : phi.vertex_map()) vmap.push_back(psi(v));
  std::vector<EdgeImage> emap;
  emap.reserve(phi.source().edge_count());
  for (const EdgeImage& img : phi.edge_map())
    emap.push_back(img.is_collapsed() ? EdgeImage::collapsed() : psi(img.edge()));
  return GraphMorphism(phi.source(), psi.target(), std::move(vmap), std::move(emap));
}

}  // namespace harmonica

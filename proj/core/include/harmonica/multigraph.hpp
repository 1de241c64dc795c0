#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harmonica {

/// Dense index of a vertex within one graph. External files use string
/// names; the graph keeps the mapping.
struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

/// Dense index of an edge. Parallel edges are distinct objects.
struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
};

/// One parallel class seen from a vertex: the neighbour and every edge to it.
struct Adjacent {
  VertexId vertex;
  std::vector<EdgeId> edges;
};

/// Finite loopless multigraph. Immutable once built; copies share storage.
///
/// Connectivity is not enforced at construction so transient pieces can exist;
/// the genus and every operation built on it check it explicitly.
class MultiGraph {
 public:
  MultiGraph();

  /// Throws Error(EmptyGraph | DuplicateId | UnknownVertex | LoopEdge).
  static MultiGraph build(std::span<const std::string> vertices,
                          std::span<const EdgeSpec> edges);

  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;

  const std::string& name(VertexId v) const;
  const std::string& name(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws UnknownVertex
  EdgeId edge(std::string_view name) const;      // throws UnknownEdge

  /// Endpoints in the order they were given.
  std::pair<VertexId, VertexId> ends(EdgeId e) const;
  VertexId opposite(EdgeId e, VertexId v) const;
  bool incident(EdgeId e, VertexId v) const;

  /// Incident edges in increasing edge index.
  std::span<const EdgeId> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const;

  /// Distinct neighbours, sorted by index, each with its parallel class.
  std::span<const Adjacent> adjacent(VertexId v) const;
  std::size_t multiplicity(VertexId u, VertexId v) const;
  std::span<const EdgeId> parallel_edges(VertexId u, VertexId v) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  /// Same names, same edge table, same order.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  struct Data;
  explicit MultiGraph(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> d_;
};

/// Incremental construction with dense ids handed back immediately.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId u, VertexId v);
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  MultiGraph build() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeSpec> edges_;
};

MultiGraph build_graph(std::span<const std::string> vertices,
                       std::span<const EdgeSpec> edges);

bool is_connected(const MultiGraph& g);

/// |E| - |V| + 1. Throws Error(Disconnected).
int genus(const MultiGraph& g);

/// x(1): the edges incident to x and their endpoints.
struct Neighborhood {
  VertexId center;
  std::vector<VertexId> vertices;  // center first, then neighbours by index
  std::vector<EdgeId> edges;
};

Neighborhood neighborhood(const MultiGraph& g, VertexId x);

/// Byte string equal for two graphs iff they are isomorphic. Deterministic.
std::string canonical_key(const MultiGraph& g);

/// Labelling that sends g to its canonical form: position[v] is the
/// canonical index of v.
std::vector<std::uint32_t> canonical_labelling(const MultiGraph& g);

struct GraphIsomorphism {
  std::vector<VertexId> vertex_map;  // indexed by source vertex
  std::vector<EdgeId> edge_map;      // indexed by source edge
};

std::optional<GraphIsomorphism> are_isomorphic(const MultiGraph& g, const MultiGraph& h);

/// Same abstract graph with re-ordered internal indices: vertex v of g becomes
/// vertex vertex_perm[v] of the result (names travel with their objects).
MultiGraph relabel(const MultiGraph& g, std::span<const std::uint32_t> vertex_perm,
                   std::span<const std::uint32_t> edge_perm);

}  // namespace harmonica

#include "harmonica/multigraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "harmonica/error.hpp"

namespace harmonica {

struct MultiGraph::Data {
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
  std::unordered_map<std::string, std::uint32_t> vertex_index;
  std::unordered_map<std::string, std::uint32_t> edge_index;
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<std::vector<EdgeId>> incident;
  std::vector<std::vector<Adjacent>> adjacent;
};

MultiGraph::MultiGraph() : d_(std::make_shared<const Data>()) {}

MultiGraph::MultiGraph(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

MultiGraph MultiGraph::build(std::span<const std::string> vertices,
                             std::span<const EdgeSpec> edges) {
  if (vertices.empty()) throw Error(Errc::EmptyGraph, "graph has no vertices");

  auto data = std::make_shared<Data>();
  data->vertex_names.assign(vertices.begin(), vertices.end());
  data->vertex_index.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (!data->vertex_index.emplace(vertices[i], i).second)
      throw Error(Errc::DuplicateId, "duplicate vertex id '" + vertices[i] + "'");
  }

  const auto lookup = [&](const std::string& name, const std::string& edge) {
    auto it = data->vertex_index.find(name);
    if (it == data->vertex_index.end())
      throw Error(Errc::UnknownVertex,
                  "edge '" + edge + "' references unknown vertex '" + name + "'");
    return VertexId{it->second};
  };

  data->incident.resize(vertices.size());
  data->edge_names.reserve(edges.size());
  data->ends.reserve(edges.size());
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& spec = edges[i];
    if (!data->edge_index.emplace(spec.id, i).second)
      throw Error(Errc::DuplicateId, "duplicate edge id '" + spec.id + "'");
    VertexId u = lookup(spec.u, spec.id);
    VertexId v = lookup(spec.v, spec.id);
    if (u == v) throw Error(Errc::LoopEdge, "edge '" + spec.id + "' is a loop at '" + spec.u + "'");
    data->edge_names.push_back(spec.id);
    data->ends.emplace_back(u, v);
    data->incident[u.index].push_back(EdgeId{i});
    data->incident[v.index].push_back(EdgeId{i});
  }

  data->adjacent.resize(vertices.size());
  for (std::uint32_t x = 0; x < vertices.size(); ++x) {
    auto& classes = data->adjacent[x];
    for (EdgeId e : data->incident[x]) {
      auto [a, b] = data->ends[e.index];
      VertexId other = a.index == x ? b : a;
      auto it = std::lower_bound(classes.begin(), classes.end(), other,
                                 [](const Adjacent& c, VertexId w) { return c.vertex < w; });
      if (it == classes.end() || it->vertex != other) it = classes.insert(it, Adjacent{other, {}});
      it->edges.push_back(e);
    }
  }
  return MultiGraph(std::move(data));
}

std::size_t MultiGraph::vertex_count() const noexcept { return d_->vertex_names.size(); }
std::size_t MultiGraph::edge_count() const noexcept { return d_->edge_names.size(); }

const std::string& MultiGraph::name(VertexId v) const { return d_->vertex_names.at(v.index); }
const std::string& MultiGraph::name(EdgeId e) const { return d_->edge_names.at(e.index); }

std::optional<VertexId> MultiGraph::find_vertex(std::string_view name) const {
  auto it = d_->vertex_index.find(std::string(name));
  if (it == d_->vertex_index.end()) return std::nullopt;
  return VertexId{it->second};
}

std::optional<EdgeId> MultiGraph::find_edge(std::string_view name) const {
  auto it = d_->edge_index.find(std::string(name));
  if (it == d_->edge_index.end()) return std::nullopt;
  return EdgeId{it->second};
}

VertexId MultiGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(Errc::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

EdgeId MultiGraph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(Errc::UnknownEdge, "unknown edge '" + std::string(name) + "'");
}

std::pair<VertexId, VertexId> MultiGraph::ends(EdgeId e) const { return d_->ends.at(e.index); }

VertexId MultiGraph::opposite(EdgeId e, VertexId v) const {
  auto [a, b] = ends(e);
  return a == v ? b : a;
}

bool MultiGraph::incident(EdgeId e, VertexId v) const {
  auto [a, b] = ends(e);
  return a == v || b == v;
}

std::span<const EdgeId> MultiGraph::incident_edges(VertexId v) const {
  return d_->incident.at(v.index);
}

std::size_t MultiGraph::degree(VertexId v) const { return incident_edges(v).size(); }

std::span<const Adjacent> MultiGraph::adjacent(VertexId v) const {
  return d_->adjacent.at(v.index);
}

std::span<const EdgeId> MultiGraph::parallel_edges(VertexId u, VertexId v) const {
  const auto& classes = d_->adjacent.at(u.index);
  auto it = std::lower_bound(classes.begin(), classes.end(), v,
                             [](const Adjacent& c, VertexId w) { return c.vertex < w; });
  if (it == classes.end() || it->vertex != v) return {};
  return it->edges;
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
  return parallel_edges(u, v).size();
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out(vertex_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = VertexId{i};
  return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
  std::vector<EdgeId> out(edge_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = EdgeId{i};
  return out;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->vertex_names == b.d_->vertex_names && a.d_->edge_names == b.d_->edge_names &&
         a.d_->ends == b.d_->ends;
}

VertexId GraphBuilder::add_vertex(std::string name) {
  vertices_.push_back(std::move(name));
  return VertexId{static_cast<std::uint32_t>(vertices_.size() - 1)};
}

EdgeId GraphBuilder::add_edge(std::string name, VertexId u, VertexId v) {
  edges_.push_back(EdgeSpec{std::move(name), vertices_.at(u.index), vertices_.at(v.index)});
  return EdgeId{static_cast<std::uint32_t>(edges_.size() - 1)};
}

MultiGraph GraphBuilder::build() const { return MultiGraph::build(vertices_, edges_); }

MultiGraph build_graph(std::span<const std::string> vertices, std::span<const EdgeSpec> edges) {
  return MultiGraph::build(vertices, edges);
}

bool is_connected(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{VertexId{0}};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Adjacent& a : g.adjacent(v)) {
      if (!seen[a.vertex.index]) {
        seen[a.vertex.index] = true;
        ++reached;
        stack.push_back(a.vertex);
      }
    }
  }
  return reached == n;
}

int genus(const MultiGraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "genus requires a connected graph");
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

Neighborhood neighborhood(const MultiGraph& g, VertexId x) {
  if (x.index >= g.vertex_count())
    throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(x.index));
  Neighborhood n{x, {x}, {}};
  for (const Adjacent& a : g.adjacent(x)) n.vertices.push_back(a.vertex);
  auto inc = g.incident_edges(x);
  n.edges.assign(inc.begin(), inc.end());
  return n;
}

MultiGraph relabel(const MultiGraph& g, std::span<const std::uint32_t> vertex_perm,
                   std::span<const std::uint32_t> edge_perm) {
  if (vertex_perm.size() != g.vertex_count() || edge_perm.size() != g.edge_count())
    throw Error(Errc::InvalidArgument, "relabel: permutation size mismatch");
  std::vector<std::string> names(g.vertex_count());
  std::vector<bool> hit(g.vertex_count(), false);
  for (std::uint32_t v = 0; v < vertex_perm.size(); ++v) {
    if (vertex_perm[v] >= names.size() || hit[vertex_perm[v]])
      throw Error(Errc::NotBijective, "relabel: vertex permutation");
    hit[vertex_perm[v]] = true;
    names[vertex_perm[v]] = g.name(VertexId{v});
  }
  std::vector<EdgeSpec> specs(g.edge_count());
  std::vector<bool> ehit(g.edge_count(), false);
  for (std::uint32_t e = 0; e < edge_perm.size(); ++e) {
    if (edge_perm[e] >= specs.size() || ehit[edge_perm[e]])
      throw Error(Errc::NotBijective, "relabel: edge permutation");
    ehit[edge_perm[e]] = true;
    auto [a, b] = g.ends(EdgeId{e});
    specs[edge_perm[e]] = EdgeSpec{g.name(EdgeId{e}), g.name(a), g.name(b)};
  }
  return MultiGraph::build(names, specs);
}

}  // namespace harmonica

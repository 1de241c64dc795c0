#include <algorithm>
#include <numeric>

#include "detail/weighted_graph.hpp"

namespace harmonica::detail {

std::uint32_t WeightedGraph::weight(std::uint32_t u, std::uint32_t v) const {
  const auto& row = adj[u];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const auto& p, std::uint32_t w) { return p.first < w; });
  return it != row.end() && it->first == v ? it->second : 0;
}

WeightedGraph WeightedGraph::from(const MultiGraph& g) {
  WeightedGraph w;
  w.adj.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (const Adjacent& a : g.adjacent(VertexId{v}))
      w.adj[v].emplace_back(a.vertex.index, static_cast<std::uint32_t>(a.edges.size()));
  }
  return w;
}

WeightedGraph WeightedGraph::from_matrix(std::size_t n, std::span<const std::uint8_t> matrix) {
  WeightedGraph w;
  w.adj.resize(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v && matrix[u * n + v] != 0) w.adj[u].emplace_back(v, matrix[u * n + v]);
  return w;
}

namespace {

// Replaces colours by the rank of their value.
std::size_t normalize(std::vector<std::uint32_t>& colors) {
  std::vector<std::uint32_t> values(colors);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& c : colors)
    c = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return values.size();
}

}  // namespace

std::vector<std::uint32_t> refine(const WeightedGraph& g, std::vector<std::uint32_t> colors) {
  const std::size_t n = g.size();
  std::size_t classes = normalize(colors);
  std::vector<std::vector<std::uint64_t>> sig(n);
  std::vector<std::uint32_t> order(n);
  while (classes < n) {
    for (std::uint32_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      for (auto [u, m] : g.adj[v]) s.push_back((std::uint64_t{colors[u]} << 32) | m);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::vector<std::uint32_t> next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const std::size_t next_classes = n == 0 ? 0 : rank + 1;
    colors.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

}  // namespace harmonica::detail

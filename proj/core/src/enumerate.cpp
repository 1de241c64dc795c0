#include <map>
#include <set>

#include "detail/weighted_graph.hpp"
#include "harmonica/census.hpp"
#include "harmonica/error.hpp"

namespace harmonica {

namespace {

using Matrix = std::vector<std::uint8_t>;  // row-major n x n multiplicities

struct Canon {
  std::string key;
  Matrix matrix;  // in canonical vertex order
};

Canon canonicalize(std::size_t n, const Matrix& m) {
  auto form = detail::canonical_form(detail::WeightedGraph::from_matrix(n, m));
  Matrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[form.position[i] * n + form.position[j]] = m[i * n + j];
  return Canon{std::move(form.certificate), std::move(out)};
}

bool connected(std::size_t n, const Matrix& m) {
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u)
      if (m[v * n + u] && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

// Connected simple graphs on n vertices with between lo and hi edges, one per
// isomorphism class, grouped by edge count.
std::vector<std::vector<Matrix>> simple_supports(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<std::vector<Matrix>> by_edges(hi + 1);
  std::map<std::string, Matrix> level{{canonicalize(n, Matrix(n * n, 0)).key, Matrix(n * n, 0)}};
  for (std::size_t k = 0;; ++k) {
    if (k >= lo)
      for (const auto& [key, m] : level)
        if (connected(n, m)) by_edges[k].push_back(m);
    if (k == hi) break;
    std::map<std::string, Matrix> next;
    for (const auto& [key, m] : level)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m[i * n + j]) continue;
          Matrix a = m;
          a[i * n + j] = a[j * n + i] = 1;
          Canon c = canonicalize(n, a);
          next.emplace(std::move(c.key), std::move(c.matrix));
        }
    level = std::move(next);
  }
  return by_edges;
}

// Adds `extra` further parallel copies over the support edges in every way.
void distribute(std::size_t n, Matrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                std::size_t from, std::size_t extra, std::map<std::string, Matrix>& out) {
  if (extra == 0) {
    Canon c = canonicalize(n, m);
    out.emplace(std::move(c.key), std::move(c.matrix));
    return;
  }
  for (std::size_t k = from; k < edges.size(); ++k) {
    auto [i, j] = edges[k];
    ++m[i * n + j];
    ++m[j * n + i];
    distribute(n, m, edges, k, extra - 1, out);
    --m[i * n + j];
    --m[j * n + i];
  }
}

MultiGraph to_graph(std::size_t n, const Matrix& m) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::uint8_t k = 0; k < m[i * n + j]; ++k)
        b.add_edge("e" + std::to_string(e++), VertexId{static_cast<std::uint32_t>(i)},
                   VertexId{static_cast<std::uint32_t>(j)});
  return b.build();
}

}  // namespace

void for_each_graph(int g, std::size_t v_max, const std::function<bool(const MultiGraph&)>& visit) {
  if (g < 0) throw Error(Errc::InvalidArgument, "genus must be >= 0");
  if (v_max > 12) throw Error(Errc::InvalidArgument, "vertex bound above 12 is not supported");
  if (g + 1 > 254) throw Error(Errc::InvalidArgument, "genus too large");
  for (std::size_t n = 2; n <= v_max; ++n) {
    const std::size_t total = n - 1 + static_cast<std::size_t>(g);
    const std::size_t hi = std::min(total, n * (n - 1) / 2);
    auto supports = simple_supports(n, n - 1, hi);
    std::map<std::string, Matrix> found;
    for (std::size_t k = n - 1; k <= hi; ++k)
      for (Matrix m : supports[k]) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (m[i * n + j]) edges.emplace_back(i, j);
        distribute(n, m, edges, 0, total - k, found);
      }
    for (const auto& [key, m] : found)
      if (!visit(to_graph(n, m))) return;
  }
}

std::vector<MultiGraph> enumerate_graphs(int g, std::size_t v_max) {
  std::vector<MultiGraph> out;
  for_each_graph(g, v_max, [&](const MultiGraph& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace harmonica

#include <algorithm>
#include <numeric>

#include "detail/weighted_graph.hpp"
#include "harmonica/error.hpp"

namespace harmonica {
namespace detail {

namespace {

void append_weight(std::string& out, std::uint32_t w) {
  if (w < 255) {
    out.push_back(static_cast<char>(w));
    return;
  }
  out.push_back(static_cast<char>(255));
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((w >> shift) & 0xff));
}

// u ~ v iff they see every third vertex with the same weight. Swapping twins
// is an automorphism, so the canonical search only needs one of each.
std::vector<std::uint32_t> twin_classes(const WeightedGraph& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.size());
  std::vector<std::uint32_t> cls(n);
  std::iota(cls.begin(), cls.end(), 0u);
  auto without = [&](std::uint32_t v, std::uint32_t drop) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
    row.reserve(g.adj[v].size());
    for (const auto& p : g.adj[v])
      if (p.first != drop) row.push_back(p);
    return row;
  };
  for (std::uint32_t u = 0; u < n; ++u) {
    if (cls[u] != u) continue;
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (cls[v] != v || g.adj[u].size() + 1 < g.adj[v].size() ||
          g.adj[v].size() + 1 < g.adj[u].size())
        continue;
      if (without(u, v) == without(v, u)) cls[v] = u;
    }
  }
  return cls;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const WeightedGraph& g) : g_(g), twins_(twin_classes(g)) {}

  CanonicalForm run() {
    search(std::vector<std::uint32_t>(g_.size(), 0));
    return CanonicalForm{best_, best_position_};
  }

 private:
  void search(std::vector<std::uint32_t> colors) {
    colors = refine(g_, std::move(colors));
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> count(n, 0);
    for (auto c : colors) ++count[c];
    std::uint32_t target = static_cast<std::uint32_t>(n);
    for (std::uint32_t c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target == n) {
      leaf(colors);
      return;
    }
    std::vector<std::uint32_t> tried;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (std::find(tried.begin(), tried.end(), twins_[v]) != tried.end()) continue;
      tried.push_back(twins_[v]);
      std::vector<std::uint32_t> child(n);
      for (std::uint32_t w = 0; w < n; ++w)
        child[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1u : 0u);
      search(std::move(child));
    }
  }

  void leaf(const std::vector<std::uint32_t>& position) {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> at(n);
    for (std::uint32_t v = 0; v < n; ++v) at[position[v]] = v;
    std::string cert;
    cert.reserve(4 + n * (n - 1) / 2);
    append_weight(cert, static_cast<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) append_weight(cert, g_.weight(at[i], at[j]));
    if (!have_best_ || cert < best_) {
      have_best_ = true;
      best_ = std::move(cert);
      best_position_ = position;
    }
  }

  const WeightedGraph& g_;
  std::vector<std::uint32_t> twins_;
  bool have_best_ = false;
  std::string best_;
  std::vector<std::uint32_t> best_position_;
};

// Vertex order for backtracking: breadth-first from the rarest colour, so
// every vertex after the first in its component has an already-placed parent.
struct Plan {
  std::vector<std::uint32_t> order;
  std::vector<std::int64_t> parent;  // -1 for component roots
};

Plan make_plan(const WeightedGraph& g, const std::vector<std::uint32_t>& colors) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.size());
  std::vector<std::uint32_t> count(n + 1, 0);
  for (auto c : colors) ++count[c];
  std::vector<std::uint32_t> roots(n);
  std::iota(roots.begin(), roots.end(), 0u);
  std::stable_sort(roots.begin(), roots.end(), [&](std::uint32_t a, std::uint32_t b) {
    return count[colors[a]] < count[colors[b]];
  });
  Plan plan;
  plan.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  for (std::uint32_t root : roots) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = plan.order.size();
    plan.order.push_back(root);
    while (head < plan.order.size()) {
      std::uint32_t v = plan.order[head++];
      for (auto [u, m] : g.adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          plan.parent[u] = v;
          plan.order.push_back(u);
        }
      }
    }
  }
  return plan;
}

// Backtracking matcher a -> b restricted to equal colours.
class Matcher {
 public:
  Matcher(const WeightedGraph& a, const WeightedGraph& b, std::vector<std::uint32_t> color_a,
          std::vector<std::uint32_t> color_b)
      : a_(a), b_(b), ca_(std::move(color_a)), cb_(std::move(color_b)),
        plan_(make_plan(a, ca_)), image_(a.size(), kNone), used_(b.size(), false) {}

  // Returns false if `visit` asked to stop.
  bool run(const std::function<bool(std::span<const std::uint32_t>)>& visit) {
    visit_ = &visit;
    return extend(0);
  }

 private:
  static constexpr std::uint32_t kNone = ~0u;

  bool consistent(std::uint32_t depth, std::uint32_t v, std::uint32_t h) const {
    if (ca_[v] != cb_[h] || a_.adj[v].size() != b_.adj[h].size()) return false;
    for (std::uint32_t i = 0; i < depth; ++i) {
      std::uint32_t u = plan_.order[i];
      if (a_.weight(v, u) != b_.weight(h, image_[u])) return false;
    }
    return true;
  }

  bool extend(std::uint32_t depth) {
    if (depth == plan_.order.size()) return (*visit_)(image_);
    const std::uint32_t v = plan_.order[depth];
    auto attempt = [&](std::uint32_t h) {
      if (used_[h] || !consistent(depth, v, h)) return true;
      image_[v] = h;
      used_[h] = true;
      bool go_on = extend(depth + 1);
      used_[h] = false;
      image_[v] = kNone;
      return go_on;
    };
    if (plan_.parent[v] >= 0) {
      std::uint32_t ph = image_[static_cast<std::uint32_t>(plan_.parent[v])];
      for (auto [h, m] : b_.adj[ph])
        if (!attempt(h)) return false;
    } else {
      for (std::uint32_t h = 0; h < b_.size(); ++h)
        if (!attempt(h)) return false;
    }
    return true;
  }

  const WeightedGraph& a_;
  const WeightedGraph& b_;
  std::vector<std::uint32_t> ca_, cb_;
  Plan plan_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> used_;
  const std::function<bool(std::span<const std::uint32_t>)>* visit_ = nullptr;
};

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& g) { return CanonicalSearch(g).run(); }

std::optional<std::vector<std::uint32_t>> find_isomorphism(const WeightedGraph& a,
                                                           const WeightedGraph& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::uint32_t n = static_cast<std::uint32_t>(a.size());
  WeightedGraph both;
  both.adj = a.adj;
  for (const auto& row : b.adj) {
    auto& r = both.adj.emplace_back();
    for (auto [u, m] : row) r.emplace_back(u + n, m);
  }
  auto colors = refine(both, std::vector<std::uint32_t>(2 * n, 0));
  std::vector<std::uint32_t> ca(colors.begin(), colors.begin() + n);
  std::vector<std::uint32_t> cb(colors.begin() + n, colors.end());
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::optional<std::vector<std::uint32_t>> found;
  Matcher(a, b, std::move(ca), std::move(cb)).run([&](std::span<const std::uint32_t> image) {
    found.emplace(image.begin(), image.end());
    return false;
  });
  return found;
}

void for_each_automorphism(const WeightedGraph& g,
                           const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  auto colors = refine(g, std::vector<std::uint32_t>(g.size(), 0));
  Matcher(g, g, colors, colors).run(visit);
}

}  // namespace detail

std::string canonical_key(const MultiGraph& g) {
  return detail::canonical_form(detail::WeightedGraph::from(g)).certificate;
}

std::vector<std::uint32_t> canonical_labelling(const MultiGraph& g) {
  return detail::canonical_form(detail::WeightedGraph::from(g)).position;
}

std::optional<GraphIsomorphism> are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto vmap = detail::find_isomorphism(detail::WeightedGraph::from(g), detail::WeightedGraph::from(h));
  if (!vmap) return std::nullopt;
  GraphIsomorphism iso;
  iso.vertex_map.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < vmap->size(); ++v) iso.vertex_map[v] = VertexId{(*vmap)[v]};
  iso.edge_map.resize(g.edge_count());
  for (VertexId u : g.vertices()) {
    for (const Adjacent& a : g.adjacent(u)) {
      if (a.vertex < u) continue;
      auto targets = h.parallel_edges(iso.vertex_map[u.index], iso.vertex_map[a.vertex.index]);
      for (std::size_t i = 0; i < a.edges.size(); ++i) iso.edge_map[a.edges[i].index] = targets[i];
    }
  }
  return iso;
}

}  // namespace harmonica

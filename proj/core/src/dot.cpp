#include "harmonica/dot.hpp"

#include <sstream>

#include "harmonica/ramification.hpp"

namespace harmonica {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void body(std::ostringstream& os, const MultiGraph& g, const std::string& prefix, const GraphMorphism* phi,
          const std::vector<std::string>& labels, const std::string& indent) {
  for (VertexId v : g.vertices()) {
    os << indent << quoted(prefix + g.name(v));
    const std::string& extra = labels.empty() ? std::string() : labels[v.index];
    os << " [label=" << quoted(extra.empty() ? g.name(v) : g.name(v) + " " + extra) << "];\n";
  }
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    os << indent << quoted(prefix + g.name(u)) << " -- " << quoted(prefix + g.name(v)) << " [label="
       << quoted(g.name(e));
    if (phi && phi->is_vertical(e)) os << ", style=dashed";
    os << "];\n";
  }
}

}  // namespace

std::string to_dot(const MultiGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  body(os, g, "", nullptr, {}, "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const GraphMorphism& phi) {
  std::ostringstream os;
  os << "graph G {\n";
  body(os, phi.source(), "", &phi, {}, "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const ActionGroup& group) {
  const Quotient q = quotient(group);
  std::vector<std::string> labels(q.graph.vertex_count());
  if (is_harmonic_action(group)) {
    const RamificationProfile p = profile(group);
    for (const auto& b : p.branch_points)
      labels[b.y.index] = "(" + std::to_string(b.shape.r) + "," + std::to_string(b.shape.w) + ")";
  }
  std::ostringstream os;
  os << "graph G {\n";
  os << "  subgraph cluster_cover {\n    label=" << quoted("G, |Γ|=" + std::to_string(group.order())) << ";\n";
  body(os, group.graph(), "G:", &q.morphism, {}, "    ");
  os << "  }\n";
  os << "  subgraph cluster_quotient {\n    label=\"G/Γ\";\n";
  body(os, q.graph, "Q:", nullptr, labels, "    ");
  os << "  }\n}\n";
  return os.str();
}

}  // namespace harmonica

#include "harmonica/io.hpp"

#include <json.hpp>
#include <set>

#include "harmonica/error.hpp"

namespace harmonica {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

json load(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset is the most precise location nlohmann gives
    throw Error(Errc::ParseError, "$ (byte " + std::to_string(e.byte) + "): malformed JSON");
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const std::string& str(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get_ref<const std::string&>();
}

std::size_t count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    fail(path, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

ordered vertex_map_json(const MultiGraph& src, const MultiGraph& dst, const std::vector<VertexId>& map) {
  ordered out = ordered::object();
  for (VertexId v : src.vertices()) out[src.name(v)] = dst.name(map[v.index]);
  return out;
}

// Reads {"name": "image", ...} total over `src` vertices.
std::vector<VertexId> read_vertex_map(const json& obj, const std::string& path, const MultiGraph& src,
                                      const MultiGraph& dst) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::vector<VertexId> out(src.vertex_count());
  std::vector<bool> have(src.vertex_count(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string here = path + "." + it.key();
    auto v = src.find_vertex(it.key());
    if (!v) fail(here, "unknown vertex '" + it.key() + "'");
    auto w = dst.find_vertex(str(it.value(), here));
    if (!w) fail(here, "unknown image vertex '" + it.value().get<std::string>() + "'");
    out[v->index] = *w;
    have[v->index] = true;
  }
  for (VertexId v : src.vertices())
    if (!have[v.index]) fail(path, "vertex '" + src.name(v) + "' has no image");
  return out;
}

std::vector<EdgeImage> read_edge_map(const json& obj, const std::string& path, const MultiGraph& src,
                                     const MultiGraph& dst, bool allow_collapse) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::vector<EdgeImage> out(src.edge_count(), EdgeImage::collapsed());
  std::vector<bool> have(src.edge_count(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string here = path + "." + it.key();
    auto e = src.find_edge(it.key());
    if (!e) fail(here, "unknown edge '" + it.key() + "'");
    if (it.value().is_null()) {
      if (!allow_collapse) fail(here, "an automorphism cannot collapse an edge");
    } else {
      auto f = dst.find_edge(str(it.value(), here));
      if (!f) fail(here, "unknown image edge '" + it.value().get<std::string>() + "'");
      out[e->index] = *f;
    }
    have[e->index] = true;
  }
  for (EdgeId e : src.edges())
    if (!have[e.index]) fail(path, "edge '" + src.name(e) + "' has no image");
  return out;
}

ordered profile_json(const RamificationProfile& p) {
  ordered j;
  j["order"] = p.order;
  j["genus"] = p.genus;
  j["quotient_genus"] = p.quotient_genus;
  ordered bps = ordered::array();
  for (const auto& b : p.branch_points) bps.push_back({{"r", b.shape.r}, {"w", b.shape.w}});
  j["branch_points"] = std::move(bps);
  j["R"] = p.R.to_string();
  return j;
}

ordered automorphism_json(const MultiGraph& g, const Automorphism& a) {
  ordered e = ordered::object();
  for (EdgeId x : g.edges()) e[g.name(x)] = g.name(a(x));
  return ordered{{"vertex_map", vertex_map_json(g, g, a.vertex_perm())}, {"edge_map", std::move(e)}};
}

}  // namespace

std::string serialize_graph(const MultiGraph& g) {
  ordered j;
  ordered vs = ordered::array();
  for (VertexId v : g.vertices()) vs.push_back(g.name(v));
  ordered es = ordered::array();
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    es.push_back({{"id", g.name(e)}, {"ends", {g.name(u), g.name(v)}}});
  }
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j.dump(2);
}

MultiGraph parse_graph(const std::string& text) {
  const json j = load(text);
  const json& vs = member(j, "$", "vertices");
  if (!vs.is_array()) fail("$.vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(str(vs[i], "$.vertices[" + std::to_string(i) + "]"));
  const json& es = member(j, "$", "edges");
  if (!es.is_array()) fail("$.edges", "expected an array");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const std::string& id = str(member(es[i], path, "id"), path + ".id");
    const json& ends = member(es[i], path, "ends");
    if (!ends.is_array() || ends.size() != 2) fail(path + ".ends", "expected two vertex ids");
    edges.push_back(EdgeSpec{id, str(ends[0], path + ".ends[0]"), str(ends[1], path + ".ends[1]")});
  }
  try {
    return build_graph(vertices, edges);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("$: invalid graph: ") + e.what());
  }
}

std::string serialize_morphism(const GraphMorphism& phi) {
  ordered e = ordered::object();
  for (EdgeId x : phi.source().edges()) {
    EdgeImage img = phi(x);
    if (img.is_collapsed()) e[phi.source().name(x)] = nullptr;
    else e[phi.source().name(x)] = phi.target().name(img.edge());
  }
  ordered j{{"vertex_map", vertex_map_json(phi.source(), phi.target(), phi.vertex_map())},
            {"edge_map", std::move(e)}};
  return j.dump(2);
}

GraphMorphism parse_morphism(const std::string& text, const MultiGraph& source, const MultiGraph& target) {
  const json j = load(text);
  auto vm = read_vertex_map(member(j, "$", "vertex_map"), "$.vertex_map", source, target);
  auto em = read_edge_map(member(j, "$", "edge_map"), "$.edge_map", source, target, true);
  try {
    return GraphMorphism(source, target, std::move(vm), std::move(em));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("$: invalid morphism: ") + e.what());
  }
}

std::string serialize_automorphisms(const MultiGraph& g, const std::vector<Automorphism>& generators) {
  ordered gens = ordered::array();
  for (const auto& a : generators) gens.push_back(automorphism_json(g, a));
  return ordered{{"generators", std::move(gens)}}.dump(2);
}

std::string serialize_action(const ActionGroup& group) {
  return serialize_automorphisms(group.graph(), group.generators());
}

std::vector<Automorphism> parse_automorphisms(const std::string& text, const MultiGraph& g) {
  const json j = load(text);
  const json& gens = member(j, "$", "generators");
  if (!gens.is_array()) fail("$.generators", "expected an array");
  std::vector<Automorphism> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "$.generators[" + std::to_string(i) + "]";
    auto vm = read_vertex_map(member(gens[i], path, "vertex_map"), path + ".vertex_map", g, g);
    auto em = read_edge_map(member(gens[i], path, "edge_map"), path + ".edge_map", g, g, false);
    std::vector<EdgeId> ep;
    for (const auto& x : em) ep.push_back(x.edge());
    try {
      out.emplace_back(g, std::move(vm), std::move(ep));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, path + ": " + e.what());
    }
  }
  return out;
}

ActionGroup parse_action(const std::string& text, const MultiGraph& g, std::size_t cap) {
  return generate_group(g, parse_automorphisms(text, g), cap);
}

std::string serialize_profile(const RamificationProfile& p) { return profile_json(p).dump(2); }

RamificationProfile parse_profile(const std::string& text) {
  const json j = load(text);
  const std::size_t order = count(member(j, "$", "order"), "$.order");
  const auto g = static_cast<int>(count(member(j, "$", "genus"), "$.genus"));
  const auto gq = static_cast<int>(count(member(j, "$", "quotient_genus"), "$.quotient_genus"));
  const json& bps = member(j, "$", "branch_points");
  if (!bps.is_array()) fail("$.branch_points", "expected an array");
  std::vector<BranchShape> shapes;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string path = "$.branch_points[" + std::to_string(i) + "]";
    const std::size_t r = count(member(bps[i], path, "r"), path + ".r");
    if (r == 0) fail(path + ".r", "must be positive");
    shapes.push_back(BranchShape{r, count(member(bps[i], path, "w"), path + ".w")});
  }
  RamificationProfile p = summary_profile(order, g, gq, shapes);
  const std::string& rs = str(member(j, "$", "R"), "$.R");
  Rational stated;
  try {
    stated = Rational::parse(rs);
  } catch (const std::exception&) {
    fail("$.R", "not a fraction");
  }
  if (stated != p.R) fail("$.R", "R = " + rs + " disagrees with the branch points (" + p.R.to_string() + ")");
  return p;
}

std::string serialize_census(const CensusReport& report) {
  ordered j;
  j["genus"] = report.genus;
  j["max_vertices"] = report.max_vertices;
  j["graphs"] = report.records.size();
  j["max_order"] = report.max_order;
  j["harmonic_pairs"] = report.harmonic_pairs;
  j["definition_checks"] = report.definition_checks;
  j["truncated"] = report.truncated;
  ordered notes = ordered::array();
  for (const auto& n : report.notes) notes.push_back(n);
  j["notes"] = std::move(notes);
  ordered vio = ordered::array();
  for (const auto& v : report.violations)
    vio.push_back({{"key", v.key}, {"order", v.order}, {"property", v.property}, {"detail", v.detail}});
  j["violations"] = std::move(vio);
  ordered recs = ordered::array();
  for (const auto& r : report.records) {
    ordered rec;
    rec["key"] = r.key;
    rec["vertices"] = r.vertices;
    rec["edges"] = r.edges;
    rec["aut_order"] = r.aut_order;
    rec["truncated"] = r.truncated;
    rec["harmonic_subgroups"] = r.harmonic_subgroups;
    rec["max_harmonic_order"] = r.max_order;
    rec["graph"] = ordered::parse(serialize_graph(r.graph));
    ordered gens = ordered::array();
    for (const auto& a : r.witness_generators) gens.push_back(automorphism_json(r.graph, a));
    rec["witness_generators"] = std::move(gens);
    if (r.witness_profile) {
      rec["witness_profile"] = profile_json(*r.witness_profile);
      rec["witness_case"] = r.witness_case;
    }
    recs.push_back(std::move(rec));
  }
  j["records"] = std::move(recs);
  return j.dump(2);
}

}  // namespace harmonica

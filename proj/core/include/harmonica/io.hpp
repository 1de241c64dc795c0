#pragma once

#include <string>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/census.hpp"
#include "harmonica/morphism.hpp"
#include "harmonica/multigraph.hpp"
#include "harmonica/ramification.hpp"

namespace harmonica {

// JSON codecs. Every parser throws Error(ParseError) whose message names the
// offending location, e.g. "$.edges[2].ends: expected two vertex ids".

/// {"vertices":["a",...], "edges":[{"id":"e1","ends":["a","b"]},...]}
std::string serialize_graph(const MultiGraph& g);
MultiGraph parse_graph(const std::string& text);

/// {"vertex_map":{...}, "edge_map":{"e1":"f1","e2":null,...}}; null = collapsed.
std::string serialize_morphism(const GraphMorphism& phi);
GraphMorphism parse_morphism(const std::string& text, const MultiGraph& source, const MultiGraph& target);

/// {"generators":[{"vertex_map":{...},"edge_map":{...}},...]}
std::string serialize_automorphisms(const MultiGraph& g, const std::vector<Automorphism>& generators);
std::string serialize_action(const ActionGroup& group);
std::vector<Automorphism> parse_automorphisms(const std::string& text, const MultiGraph& g);
/// Parses the generators and closes them. Error(BudgetExceeded) past `cap`.
ActionGroup parse_action(const std::string& text, const MultiGraph& g, std::size_t cap = kDefaultClosureCap);

/// {"order":..,"genus":..,"quotient_genus":..,"branch_points":[{"r":..,"w":..}],"R":"7/3"}
std::string serialize_profile(const RamificationProfile& p);
/// Summary profile (no per-vertex data).
RamificationProfile parse_profile(const std::string& text);

std::string serialize_census(const CensusReport& report);

}  // namespace harmonica

#pragma once

#include <string>

#include "harmonica/action.hpp"
#include "harmonica/morphism.hpp"
#include "harmonica/multigraph.hpp"

namespace harmonica {

/// Undirected DOT rendering, one line per edge.
std::string to_dot(const MultiGraph& g);

/// The source graph with the morphism's vertical edges dashed.
std::string to_dot(const GraphMorphism& phi);

/// G with quotient-vertical edges dashed, next to G/Γ. When the action is
/// harmonic, branch points of G/Γ are labelled (r,w).
std::string to_dot(const ActionGroup& group);

}  // namespace harmonica

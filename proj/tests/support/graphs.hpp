#pragma once

// Small hand-built graphs shared by the unit tests.

#include <string>
#include <vector>

#include "harmonica/multigraph.hpp"

namespace fixtures {

inline harmonica::MultiGraph path(std::size_t edges) {
  std::vector<std::string> vs;
  std::vector<harmonica::EdgeSpec> es;
  for (std::size_t i = 0; i <= edges; ++i) vs.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < edges; ++i) es.push_back({"q" + std::to_string(i), vs[i], vs[i + 1]});
  return harmonica::build_graph(vs, es);
}

/// Two vertices joined by k parallel edges.
inline harmonica::MultiGraph banana(std::size_t k) {
  std::vector<std::string> vs{"x", "y"};
  std::vector<harmonica::EdgeSpec> es;
  for (std::size_t i = 0; i < k; ++i) es.push_back({"b" + std::to_string(i), "x", "y"});
  return harmonica::build_graph(vs, es);
}

inline harmonica::MultiGraph cycle(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<harmonica::EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) es.push_back({"k" + std::to_string(i), vs[i], vs[(i + 1) % n]});
  return harmonica::build_graph(vs, es);
}

}  // namespace fixtures

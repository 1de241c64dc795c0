#pragma once

// Brute-force reference computations. Deliberately naive: they share no code
// with the library's refinement, search or closure routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "harmonica/action.hpp"
#include "harmonica/multigraph.hpp"

namespace oracle {

using harmonica::Automorphism;
using harmonica::EdgeId;
using harmonica::EdgeSpec;
using harmonica::MultiGraph;
using harmonica::VertexId;

inline std::vector<std::vector<int>> matrix(const MultiGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    ++m[u.index][v.index];
    ++m[v.index][u.index];
  }
  return m;
}

/// |Aut(G)| by trying every vertex bijection and every edge bijection.
/// Only for graphs with at most 8 edges.
inline std::size_t aut_order(const MultiGraph& g) {
  std::vector<std::uint32_t> vp(g.vertex_count()), ep(g.edge_count());
  std::iota(vp.begin(), vp.end(), 0u);
  std::size_t count = 0;
  do {
    std::iota(ep.begin(), ep.end(), 0u);
    do {
      bool ok = true;
      for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        auto [a, b] = g.ends(EdgeId{ep[e.index]});
        const VertexId fu{vp[u.index]}, fv{vp[v.index]};
        if (!((a == fu && b == fv) || (a == fv && b == fu))) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
    } while (std::next_permutation(ep.begin(), ep.end()));
  } while (std::next_permutation(vp.begin(), vp.end()));
  return count;
}

/// Isomorphism-invariant string: the lexicographically least multiplicity
/// matrix over all vertex orderings (n <= 8).
inline std::string brute_canonical(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::string best;
  bool first = true;
  do {
    std::string s(1, static_cast<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s.push_back(static_cast<char>(m[p[i]][p[j]]));
    if (first || s < best) best = s, first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::string brute_canonical(const MultiGraph& g) { return brute_canonical(matrix(g)); }

/// Number of subgroups, by testing every subset containing the identity for
/// closure under products (orders up to ~16).
inline std::size_t subgroup_count(const harmonica::ActionGroup& group) {
  const auto& el = group.elements();
  const std::size_t n = el.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<Automorphism> members{el[0]};
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) members.push_back(el[i]);
    bool closed = true;
    for (const auto& a : members) {
      for (const auto& b : members)
        if (std::find(members.begin(), members.end(), a * b) == members.end()) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) ++count;
  }
  return count;
}

/// Orbit of a vertex by applying every element.
inline std::set<std::uint32_t> orbit(const harmonica::ActionGroup& group, VertexId x) {
  std::set<std::uint32_t> out;
  for (const auto& a : group.elements()) out.insert(a(x).index);
  return out;
}

inline std::size_t stabilizer(const harmonica::ActionGroup& group, VertexId x) {
  std::size_t c = 0;
  for (const auto& a : group.elements()) c += a(x) == x;
  return c;
}

/// Every connected loopless multigraph on n vertices with multiplicities at
/// most `cap` and genus g, as brute canonical strings.
inline std::set<std::string> all_multigraphs(std::size_t n, int cap, int g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::string> out;
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pairs.size()) {
      int edges = std::accumulate(mult.begin(), mult.end(), 0);
      if (edges - static_cast<int>(n) + 1 != g) return;
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
      for (std::size_t t = 0; t < pairs.size(); ++t)
        m[pairs[t].first][pairs[t].second] = m[pairs[t].second][pairs[t].first] = mult[t];
      // connectivity by repeated sweeps
      std::vector<bool> in(n, false);
      in[0] = true;
      for (std::size_t round = 0; round < n; ++round)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (in[a] && m[a][b]) in[b] = true;
      if (std::count(in.begin(), in.end(), true) != static_cast<long>(n)) return;
      out.insert(brute_canonical(m));
      return;
    }
    for (int c = 0; c <= cap; ++c) {
      mult[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Random connected multigraph: a random tree plus `extra` random edges.
inline MultiGraph random_graph(std::mt19937& rng, std::size_t n, std::size_t extra) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> es;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    es.push_back({"e" + std::to_string(es.size()), vs[pick(rng)], vs[i]});
  }
  std::uniform_int_distribution<std::size_t> any(0, n - 1);
  while (extra > 0 && n > 1) {
    std::size_t a = any(rng), b = any(rng);
    if (a == b) continue;
    es.push_back({"e" + std::to_string(es.size()), vs[a], vs[b]});
    --extra;
  }
  return harmonica::build_graph(vs, es);
}

/// Same graph with shuffled vertex and edge order and fresh names.
inline MultiGraph shuffled(std::mt19937& rng, const MultiGraph& g) {
  std::vector<std::uint32_t> vp(g.vertex_count()), ep(g.edge_count());
  std::iota(vp.begin(), vp.end(), 0u);
  std::iota(ep.begin(), ep.end(), 0u);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ep.begin(), ep.end(), rng);
  std::vector<std::string> vs(g.vertex_count());
  for (VertexId v : g.vertices()) vs[vp[v.index]] = "w" + std::to_string(vp[v.index]);
  std::vector<EdgeSpec> es(g.edge_count());
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    if (rng() & 1) std::swap(u, v);
    es[ep[e.index]] = {"f" + std::to_string(ep[e.index]), vs[vp[u.index]], vs[vp[v.index]]};
  }
  return harmonica::build_graph(vs, es);
}

}  // namespace oracle

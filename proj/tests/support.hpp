#pragma once

// Fixtures and test-only oracles shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "sphereminor/enumerate.hpp"
#include "sphereminor/link_diagram.hpp"
#include "sphereminor/minor_engine.hpp"
#include "sphereminor/sphere_map.hpp"

namespace testing_support {

using namespace sphereminor;

// Plane K4: triangle 0-1-2 with vertex 3 inside.
inline SphereMap k4() { return from_rotations({{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {11, 7, 9}}); }

inline SphereMap doubled_edge() { return make_dipole(2); }

// A map with no orientation-reversing self-equivalence: a digon with a loop
// and a pendant edge on one side, found by exhaustive search at 4 edges.
inline SphereMap chiral_map() { return from_rotations({{0, 6, 4, 5, 2}, {1, 7}, {3}}); }

inline SphereMap random_relabel(const SphereMap& m, std::mt19937& rng) {
  std::vector<Dart> perm(m.dart_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(m, perm);
}

// Connected random map with exactly `edges` edges, grown one edge at a time.
inline SphereMap random_map(int edges, std::mt19937& rng) {
  SphereMap m;
  for (int k = 0; k < edges; ++k) {
    auto ext = detail::one_edge_extensions(m);
    m = ext[std::uniform_int_distribution<std::size_t>(0, ext.size() - 1)(rng)];
  }
  return m;
}

// All diagrams on the projections medial(g), medial(mirror g) for corpus g
// with at most max_crossings edges, with every over/under assignment, plus
// the 0-crossing diagram; one per oriented class.
inline std::vector<LinkDiagram> diagram_corpus(int max_crossings) {
  std::vector<LinkDiagram> out{LinkDiagram{}};
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen{canonical_form(LinkDiagram{})};
  for (const auto& g : connected_maps(max_crossings)) {
    for (const SphereMap& h : {g, mirror(g)}) {
      const LinkDiagram base = alternating_diagram(h);
      const std::size_t n = base.crossing_count();
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        auto cs = base.crossings();
        for (std::size_t c = 0; c < n; ++c)
          if (bits >> c & 1) cs[c].over_first = !cs[c].over_first;
        LinkDiagram d(std::move(cs), std::vector<Dart>(base.strands().begin(), base.strands().end()));
        if (seen.insert(canonical_form(d)).second) out.push_back(std::move(d));
      }
    }
  }
  return out;
}

// ---- abstract (embedding-free) multigraph minors

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // unordered endpoints, loops allowed
};

inline Multigraph forget_embedding(const SphereMap& m) {
  Multigraph g;
  g.n = static_cast<int>(m.vertex_count());
  const auto vidx = vertex_index(m);
  for (Dart e : edges(m)) g.edges.emplace_back(vidx[e], vidx[m.alpha(e)]);
  return g;
}

// Sorted adjacency multiset under a vertex permutation.
inline std::vector<std::pair<int, int>> edge_multiset(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges) es.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
  std::sort(es.begin(), es.end());
  return es;
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> id(b.n);
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_multiset(b, id);
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (edge_multiset(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Each host edge is deleted, kept, or contracted (contracted edges a forest);
// untouched vertices are dropped, matching the model semantics.
inline bool abstract_minor(const SphereMap& pattern, const SphereMap& host) {
  const Multigraph p = forget_embedding(pattern), h = forget_embedding(host);
  if (pattern.edgeless()) return true;
  const std::size_t m = h.edges.size();
  std::vector<int> state(m, 0);
  while (true) {
    detail::UnionFind uf(h.n);
    bool forest = true;
    std::vector<char> touched(h.n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == 0) continue;
      touched[h.edges[i].first] = touched[h.edges[i].second] = 1;
      if (state[i] == 2 && !uf.unite(h.edges[i].first, h.edges[i].second)) forest = false;
    }
    if (forest) {
      std::map<int, int> comp;
      for (int v = 0; v < h.n; ++v)
        if (touched[v]) comp.emplace(uf.find(v), static_cast<int>(comp.size()));
      Multigraph r;
      r.n = static_cast<int>(comp.size());
      for (std::size_t i = 0; i < m; ++i)
        if (state[i] == 1) r.edges.emplace_back(comp[uf.find(h.edges[i].first)], comp[uf.find(h.edges[i].second)]);
      if (isomorphic(p, r)) return true;
    }
    std::size_t i = 0;
    while (i < m && state[i] == 2) state[i++] = 0;
    if (i == m) return false;
    ++state[i];
  }
}

}  // namespace testing_support

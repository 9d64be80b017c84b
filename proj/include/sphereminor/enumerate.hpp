#pragma once

// Exhaustive generator of connected sphere maps up to reflective
// equivalence. Every connected map with k >= 1 edges loses a pendant edge or a
// non-bridge edge and stays connected, so level k is reached from level k - 1
// by adding a pendant edge at some corner or an edge across some face.

#include <functional>
#include <unordered_set>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/sphere_map.hpp"

namespace sphereminor {

inline constexpr int kDefaultEnumerationCap = 8;

namespace detail {

inline std::vector<SphereMap> one_edge_extensions(const SphereMap& m) {
  std::vector<SphereMap> out;
  if (m.edgeless()) {
    out.push_back(add_pendant_edge(m, -1));
    out.push_back(add_edge_in_face(m, -1, -1));
    return out;
  }
  const Dart n = static_cast<Dart>(m.dart_count());
  // The corner after dart c lies on the face of sigma(c).
  std::vector<int> fidx = face_index(m);
  for (Dart c = 0; c < n; ++c) {
    out.push_back(add_pendant_edge(m, c));
    for (Dart c2 = c; c2 < n; ++c2) {
      if (fidx[m.sigma(c)] != fidx[m.sigma(c2)]) continue;
      out.push_back(add_edge_in_face(m, c, c2));
    }
  }
  return out;
}

}  // namespace detail

/// Calls sink once per reflective class of connected maps with 1..max_edges
/// edges, in order of edge count; stops early if sink returns false.
inline void enumerate_connected_maps(int max_edges, const std::function<bool(const SphereMap&)>& sink,
                                     int cap = kDefaultEnumerationCap) {
  if (max_edges > cap)
    throw Error(Errc::cap_exceeded,
                "max_edges " + std::to_string(max_edges) + " exceeds cap " + std::to_string(cap));
  std::vector<SphereMap> level{SphereMap{}};
  for (int k = 1; k <= max_edges; ++k) {
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    std::vector<SphereMap> next;
    for (const auto& m : level) {
      for (auto& ext : detail::one_edge_extensions(m)) {
        if (seen.insert(canonical_form(ext, Orientation::reflective)).second) next.push_back(std::move(ext));
      }
    }
    for (const auto& m : next)
      if (!sink(m)) return;
    level = std::move(next);
  }
}

inline std::vector<SphereMap> connected_maps(int max_edges, int cap = kDefaultEnumerationCap) {
  std::vector<SphereMap> out;
  enumerate_connected_maps(
      max_edges,
      [&](const SphereMap& m) {
        out.push_back(m);
        return true;
      },
      cap);
  return out;
}

}  // namespace sphereminor

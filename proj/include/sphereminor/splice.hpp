#pragma once

// Removal of a 4-valent vertex by rejoining its four half-edges in pairs of
// rotation-adjacent darts. Shared by good-digraph splits and crossing
// smoothings, which are the same surgery on the underlying 4-regular map.

#include <array>
#include <optional>
#include <vector>

#include "sphereminor/sphere_map.hpp"

namespace sphereminor {

enum class SplicePairing {
  first_second,  // joins rot[0]-rot[1] and rot[2]-rot[3]
  second_third,  // joins rot[1]-rot[2] and rot[3]-rot[0]
};

struct SpliceResult {
  /// The remaining map; edgeless when nothing but a single closed curve is left.
  SphereMap map;
  /// True when the result is the vertexless closed curve.
  bool free_curve = false;
  /// old dart -> new dart, -1 for removed darts.
  std::vector<Dart> old_to_new;
};

/// `rot` is the counterclockwise rotation of a degree-4 vertex. Each joined
/// pair (p, q) lets the strand through p continue through q, so the far ends
/// alpha(p) and alpha(q) become one edge. Throws Errc::would_disconnect when
/// the result is not a single connected piece.
inline SpliceResult splice_vertex(const SphereMap& m, const std::array<Dart, 4>& rot, SplicePairing pairing) {
  std::array<Dart, 4> partner_of{};
  auto pos = [&](Dart d) {
    for (int i = 0; i < 4; ++i)
      if (rot[i] == d) return i;
    return -1;
  };
  if (pairing == SplicePairing::first_second) {
    partner_of = {1, 0, 3, 2};
  } else {
    partner_of = {3, 2, 1, 0};
  }
  detail::RawMap raw(m);
  for (Dart d : rot) raw.alive[d] = 0;
  std::vector<Dart> new_alpha(m.alpha_perm().begin(), m.alpha_perm().end());
  std::array<char, 4> used{};
  for (Dart s = 0; static_cast<std::size_t>(s) < m.dart_count(); ++s) {
    if (!raw.alive[s]) continue;
    int r = pos(m.alpha(s));
    if (r < 0) continue;
    // Follow the strand through the vertex until it leaves.
    while (true) {
      used[r] = 1;
      int q = partner_of[r];
      used[q] = 1;
      Dart t = m.alpha(rot[q]);
      int rt = pos(t);
      if (rt < 0) {
        new_alpha[s] = t;
        break;
      }
      r = rt;
    }
  }
  // Strands that never leave the vertex close up into free curves.
  int curves = 0;
  for (int i = 0; i < 4; ++i) {
    if (used[i]) continue;
    ++curves;
    int r = i;
    while (!used[r]) {
      used[r] = 1;
      int q = partner_of[r];
      used[q] = 1;
      r = pos(m.alpha(rot[q]));
    }
  }
  SpliceResult out;
  const bool survivors = raw.live_count() > 0;
  if (!survivors) {
    if (curves != 1) throw Error(Errc::would_disconnect, "splice leaves two closed curves");
    out.free_curve = true;
    out.old_to_new.assign(m.dart_count(), -1);
    return out;
  }
  if (curves > 0) throw Error(Errc::would_disconnect, "splice leaves a separate closed curve");
  // Rotations of the other vertices are untouched; only edges are rerouted.
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d)
    if (raw.alive[d]) raw.alpha[d] = new_alpha[d];
  if (!raw.live_connected()) throw Error(Errc::would_disconnect, "splice disconnects the map");
  out.map = raw.compact(&out.old_to_new);
  return out;
}

}  // namespace sphereminor

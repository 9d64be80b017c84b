#pragma once

// Rotation-system encoding of connected graphs embedded in the sphere.
//
// A map on 2E darts is the pair (sigma, alpha): sigma(d) is the next dart
// counterclockwise around the vertex of d, alpha(d) is the other half of the
// edge of d. Vertices are the orbits of sigma, faces are the orbits of
// phi = sigma o alpha, i.e. phi(d) = sigma(alpha(d)). Walking d then phi(d)
// keeps the face on the right. The zero-dart map is the single vertex with no
// edges.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sphereminor/error.hpp"

namespace sphereminor {

using Dart = std::int32_t;

namespace detail {

inline bool is_permutation(std::span<const Dart> p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline std::size_t count_orbits(std::span<const Dart> p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t n = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++n;
    for (Dart d = static_cast<Dart>(s); !seen[d]; d = p[d]) seen[d] = 1;
  }
  return n;
}

inline bool generates_transitive(std::span<const Dart> sigma, std::span<const Dart> alpha) {
  if (sigma.empty()) return true;
  std::vector<char> seen(sigma.size(), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {sigma[d], alpha[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  return reached == sigma.size();
}

}  // namespace detail

/// Lists every violated map invariant; empty iff (sigma, alpha) is a valid
/// connected sphere map.
inline std::vector<std::string> validate(std::span<const Dart> sigma, std::span<const Dart> alpha) {
  std::vector<std::string> out;
  if (sigma.size() != alpha.size()) {
    out.push_back("sigma and alpha have different sizes");
    return out;
  }
  if (sigma.size() % 2 != 0) out.push_back("odd number of darts");
  const bool sigma_ok = detail::is_permutation(sigma);
  const bool alpha_ok = detail::is_permutation(alpha);
  if (!sigma_ok) out.push_back("sigma not a permutation");
  if (!alpha_ok) {
    out.push_back("alpha not a permutation");
  } else {
    bool fixed = false, invol = true;
    for (std::size_t d = 0; d < alpha.size(); ++d) {
      if (alpha[d] == static_cast<Dart>(d)) fixed = true;
      if (alpha[alpha[d]] != static_cast<Dart>(d)) invol = false;
    }
    if (fixed) out.push_back("alpha not fixed-point-free");
    if (!invol) out.push_back("alpha not an involution");
  }
  if (!out.empty()) return out;
  if (!detail::generates_transitive(sigma, alpha)) {
    out.push_back("map not connected");
    return out;
  }
  if (!sigma.empty()) {
    std::vector<Dart> phi(sigma.size());
    for (std::size_t d = 0; d < sigma.size(); ++d) phi[d] = sigma[alpha[d]];
    const long v = static_cast<long>(detail::count_orbits(sigma));
    const long e = static_cast<long>(sigma.size() / 2);
    const long f = static_cast<long>(detail::count_orbits(phi));
    if (v - e + f != 2) {
      out.push_back("Euler characteristic V-E+F = " + std::to_string(v - e + f) +
                    ", expected 2 (not a sphere embedding)");
    }
  }
  return out;
}

class SphereMap {
 public:
  /// The single vertex with no edges.
  SphereMap() = default;

  /// Throws Errc::invalid_map when the permutations do not describe a
  /// connected sphere map.
  SphereMap(std::vector<Dart> sigma, std::vector<Dart> alpha)
      : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
    auto diags = sphereminor::validate(sigma_, alpha_);
    if (!diags.empty()) throw Error(Errc::invalid_map, diags.front());
    finish();
  }

  /// Skips validation; for parsers and tests that need to hold bad input.
  static SphereMap unchecked(std::vector<Dart> sigma, std::vector<Dart> alpha) {
    SphereMap m;
    m.sigma_ = std::move(sigma);
    m.alpha_ = std::move(alpha);
    if (m.sigma_.size() == m.alpha_.size() && detail::is_permutation(m.sigma_) &&
        detail::is_permutation(m.alpha_)) {
      m.finish();
    }
    return m;
  }

  std::size_t dart_count() const { return sigma_.size(); }
  std::size_t edge_count() const { return sigma_.size() / 2; }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t face_count() const { return faces_; }
  bool edgeless() const { return sigma_.empty(); }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  std::span<const Dart> sigma_perm() const { return sigma_; }
  std::span<const Dart> alpha_perm() const { return alpha_; }

  bool contains(Dart d) const { return d >= 0 && static_cast<std::size_t>(d) < sigma_.size(); }

  friend bool operator==(const SphereMap& a, const SphereMap& b) {
    return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
  }

 private:
  void finish() {
    sigma_inv_.assign(sigma_.size(), 0);
    for (std::size_t d = 0; d < sigma_.size(); ++d) sigma_inv_[sigma_[d]] = static_cast<Dart>(d);
    if (sigma_.empty()) {
      vertices_ = faces_ = 1;
      return;
    }
    std::vector<Dart> phi(sigma_.size());
    for (std::size_t d = 0; d < sigma_.size(); ++d) phi[d] = sigma_[alpha_[d]];
    vertices_ = detail::count_orbits(sigma_);
    faces_ = detail::count_orbits(phi);
  }

  std::vector<Dart> sigma_;
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_inv_;
  std::size_t vertices_ = 1;
  std::size_t faces_ = 1;
};

inline std::vector<std::string> validate(const SphereMap& m) {
  return validate(m.sigma_perm(), m.alpha_perm());
}

/// Orbits of sigma, each starting at its smallest dart, ordered by that dart.
/// The edgeless map has one vertex with an empty rotation.
inline std::vector<std::vector<Dart>> vertices(const SphereMap& m) {
  if (m.edgeless()) return {{}};
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(m.dart_count(), 0);
  for (Dart s = 0; static_cast<std::size_t>(s) < m.dart_count(); ++s) {
    if (seen[s]) continue;
    auto& cyc = out.emplace_back();
    for (Dart d = s; !seen[d]; d = m.sigma(d)) {
      seen[d] = 1;
      cyc.push_back(d);
    }
  }
  return out;
}

/// Orbits of phi, in the same normal form as vertices().
inline std::vector<std::vector<Dart>> faces(const SphereMap& m) {
  if (m.edgeless()) return {{}};
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(m.dart_count(), 0);
  for (Dart s = 0; static_cast<std::size_t>(s) < m.dart_count(); ++s) {
    if (seen[s]) continue;
    auto& cyc = out.emplace_back();
    for (Dart d = s; !seen[d]; d = m.phi(d)) {
      seen[d] = 1;
      cyc.push_back(d);
    }
  }
  return out;
}

/// dart -> index into vertices(m).
inline std::vector<int> vertex_index(const SphereMap& m) {
  std::vector<int> idx(m.dart_count(), -1);
  int v = 0;
  for (Dart s = 0; static_cast<std::size_t>(s) < m.dart_count(); ++s) {
    if (idx[s] >= 0) continue;
    for (Dart d = s; idx[d] < 0; d = m.sigma(d)) idx[d] = v;
    ++v;
  }
  return idx;
}

/// dart -> index into faces(m).
inline std::vector<int> face_index(const SphereMap& m) {
  std::vector<int> idx(m.dart_count(), -1);
  int f = 0;
  for (Dart s = 0; static_cast<std::size_t>(s) < m.dart_count(); ++s) {
    if (idx[s] >= 0) continue;
    for (Dart d = s; idx[d] < 0; d = m.phi(d)) idx[d] = f;
    ++f;
  }
  return idx;
}

/// Edges are named by their smaller dart.
inline Dart edge_of(const SphereMap& m, Dart d) { return std::min(d, m.alpha(d)); }

inline std::vector<Dart> edges(const SphereMap& m) {
  std::vector<Dart> out;
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d)
    if (d < m.alpha(d)) out.push_back(d);
  return out;
}

inline bool is_loop(const SphereMap& m, Dart d) {
  Dart a = m.alpha(d);
  for (Dart x = m.sigma(d); x != d; x = m.sigma(x))
    if (x == a) return true;
  return false;
}

inline std::size_t degree(const SphereMap& m, Dart d) {
  std::size_t n = 1;
  for (Dart x = m.sigma(d); x != d; x = m.sigma(x)) ++n;
  return n;
}

namespace detail {

// Mutable working copy used by the local surgeries. Darts keep their ids until
// compact(); removed darts are marked dead.
struct RawMap {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;
  std::vector<char> alive;

  explicit RawMap(const SphereMap& m)
      : sigma(m.sigma_perm().begin(), m.sigma_perm().end()),
        alpha(m.alpha_perm().begin(), m.alpha_perm().end()),
        alive(m.dart_count(), 1) {}

  Dart sigma_inv(Dart d) const {
    Dart p = d;
    while (sigma[p] != d) p = sigma[p];
    return p;
  }

  // Removes d from its rotation. Returns false if d was alone there.
  bool unlink(Dart d) {
    Dart p = sigma_inv(d);
    alive[d] = 0;
    if (p == d) return false;
    sigma[p] = sigma[d];
    return true;
  }

  std::vector<Dart> rotation_after(Dart d) const {
    std::vector<Dart> out;
    for (Dart x = sigma[d]; x != d; x = sigma[x]) out.push_back(x);
    return out;
  }

  // Plane contraction of the non-loop edge {d, alpha(d)}: the merged rotation
  // is the rotation at d's end cut open at d followed by the one at the far end
  // cut open at alpha(d).
  void contract(Dart d) {
    Dart a = alpha[d];
    std::vector<Dart> merged = rotation_after(d);
    std::vector<Dart> tail = rotation_after(a);
    merged.insert(merged.end(), tail.begin(), tail.end());
    alive[d] = alive[a] = 0;
    for (std::size_t i = 0; i < merged.size(); ++i)
      sigma[merged[i]] = merged[(i + 1) % merged.size()];
  }

  std::size_t live_count() const {
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
  }

  bool live_connected() const {
    Dart start = -1;
    for (std::size_t d = 0; d < alive.size(); ++d)
      if (alive[d]) {
        start = static_cast<Dart>(d);
        break;
      }
    if (start < 0) return true;
    std::vector<char> seen(alive.size(), 0);
    std::vector<Dart> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {sigma[d], alpha[d]}) {
        if (alive[e] && !seen[e]) {
          seen[e] = 1;
          ++reached;
          stack.push_back(e);
        }
      }
    }
    return reached == live_count();
  }

  // Renumbers live darts densely, preserving their relative order.
  // old_to_new[d] is -1 for dead darts.
  SphereMap compact(std::vector<Dart>* old_to_new = nullptr) const {
    std::vector<Dart> remap(alive.size(), -1);
    Dart next = 0;
    for (std::size_t d = 0; d < alive.size(); ++d)
      if (alive[d]) remap[d] = next++;
    std::vector<Dart> s(next), a(next);
    for (std::size_t d = 0; d < alive.size(); ++d) {
      if (!alive[d]) continue;
      s[remap[d]] = remap[sigma[d]];
      a[remap[d]] = remap[alpha[d]];
    }
    if (old_to_new) *old_to_new = std::move(remap);
    return SphereMap::unchecked(std::move(s), std::move(a));
  }
};

}  // namespace detail

struct DeleteOptions {
  bool remove_isolated = false;
};

/// Removes the edge containing dart e. Refuses deletions that leave the map
/// disconnected; an endpoint left without darts counts as a separate
/// component unless remove_isolated is set.
inline SphereMap delete_edge(const SphereMap& m, Dart e, DeleteOptions opt = {},
                             std::vector<Dart>* old_to_new = nullptr) {
  if (!m.contains(e)) throw Error(Errc::unknown_edge, "dart " + std::to_string(e));
  detail::RawMap raw(m);
  Dart a = m.alpha(e);
  bool isolated = false;
  if (!raw.unlink(e)) isolated = true;
  if (!raw.unlink(a)) isolated = true;
  if (raw.live_count() == 0) {
    // A lone loop leaves its vertex behind; a lone link leaves two vertices.
    if (is_loop(m, e)) {
      if (old_to_new) old_to_new->assign(m.dart_count(), -1);
      return SphereMap{};
    }
    throw Error(Errc::would_disconnect, "deleting the only edge separates its endpoints");
  }
  if (isolated && !opt.remove_isolated)
    throw Error(Errc::would_disconnect, "deletion isolates an endpoint");
  if (!raw.live_connected()) throw Error(Errc::would_disconnect, "edge is a bridge");
  return raw.compact(old_to_new);
}

/// Plane contraction of a non-loop edge. Face count is preserved.
inline SphereMap contract_edge(const SphereMap& m, Dart e, std::vector<Dart>* old_to_new = nullptr) {
  if (!m.contains(e)) throw Error(Errc::unknown_edge, "dart " + std::to_string(e));
  if (is_loop(m, e)) throw Error(Errc::loop_contraction, "dart " + std::to_string(e));
  detail::RawMap raw(m);
  raw.contract(e);
  return raw.compact(old_to_new);
}

/// Vertices of the dual are the faces of m; dart ids are shared, so the dual
/// edge crossing edge e carries the same darts.
inline SphereMap dual(const SphereMap& m) {
  std::vector<Dart> s(m.dart_count()), a(m.alpha_perm().begin(), m.alpha_perm().end());
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) s[d] = m.phi(d);
  return SphereMap::unchecked(std::move(s), std::move(a));
}

/// Mirror image: every rotation reversed.
inline SphereMap mirror(const SphereMap& m) {
  std::vector<Dart> s(m.dart_count()), a(m.alpha_perm().begin(), m.alpha_perm().end());
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) s[d] = m.sigma_inv(d);
  return SphereMap::unchecked(std::move(s), std::move(a));
}

/// Renames dart d to perm[d].
inline SphereMap relabel(const SphereMap& m, std::span<const Dart> perm) {
  std::vector<Dart> s(m.dart_count()), a(m.dart_count());
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    s[perm[d]] = perm[m.sigma(d)];
    a[perm[d]] = perm[m.alpha(d)];
  }
  return SphereMap::unchecked(std::move(s), std::move(a));
}

/// Builds a map from counterclockwise rotations of dart ids; the edge pairing
/// is alpha(2k) = 2k + 1.
inline SphereMap from_rotations(const std::vector<std::vector<Dart>>& rotations) {
  std::size_t n = 0;
  for (const auto& r : rotations) n += r.size();
  std::vector<Dart> s(n, -1), a(n);
  for (const auto& r : rotations)
    for (std::size_t i = 0; i < r.size(); ++i) s[r[i]] = r[(i + 1) % r.size()];
  for (std::size_t d = 0; d < n; ++d) a[d] = static_cast<Dart>(d ^ 1);
  return SphereMap(std::move(s), std::move(a));
}

/// Inserts a pendant edge into the corner after dart `corner` (any dart of
/// the edgeless map's lone vertex is written as corner = -1).
inline SphereMap add_pendant_edge(const SphereMap& m, Dart corner) {
  const Dart x = static_cast<Dart>(m.dart_count()), y = x + 1;
  std::vector<Dart> s(m.sigma_perm().begin(), m.sigma_perm().end());
  std::vector<Dart> a(m.alpha_perm().begin(), m.alpha_perm().end());
  s.resize(x + 2);
  a.resize(x + 2);
  if (corner < 0) {
    s[x] = x;
  } else {
    s[x] = s[corner];
    s[corner] = x;
  }
  s[y] = y;
  a[x] = y;
  a[y] = x;
  return SphereMap(std::move(s), std::move(a));
}

/// Inserts an edge joining the corner after c1 to the corner after c2; both
/// corners must lie on one face. c1 == c2 inserts a loop at that corner, and
/// c1 = c2 = -1 inserts a loop on the edgeless map.
inline SphereMap add_edge_in_face(const SphereMap& m, Dart c1, Dart c2) {
  const Dart x = static_cast<Dart>(m.dart_count()), y = x + 1;
  std::vector<Dart> s(m.sigma_perm().begin(), m.sigma_perm().end());
  std::vector<Dart> a(m.alpha_perm().begin(), m.alpha_perm().end());
  s.resize(x + 2);
  a.resize(x + 2);
  a[x] = y;
  a[y] = x;
  if (c1 < 0) {
    s[x] = y;
    s[y] = x;
  } else if (c1 == c2) {
    s[y] = s[c1];
    s[x] = y;
    s[c1] = x;
  } else {
    s[x] = s[c1];
    s[c1] = x;
    s[y] = s[c2];
    s[c2] = y;
  }
  return SphereMap(std::move(s), std::move(a));
}

/// The k x k grid; vertex (i, j) has rotation east, north, west, south.
inline SphereMap make_grid(int k) {
  if (k < 1) throw Error(Errc::invalid_map, "grid size must be positive");
  // Dart ids: horizontal edge (i,j)-(i,j+1) gets 2h (east end at (i,j)) and
  // 2h+1; vertical edge (i,j)-(i+1,j) gets 2v (north end at (i,j)), 2v+1.
  const int horizontal = k * (k - 1);
  auto h_dart = [&](int i, int j) { return 2 * (i * (k - 1) + j); };
  auto v_dart = [&](int i, int j) { return 2 * (horizontal + i * k + j); };
  std::vector<std::vector<Dart>> rot;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<Dart> r;
      if (j + 1 < k) r.push_back(h_dart(i, j));
      if (i + 1 < k) r.push_back(v_dart(i, j));
      if (j > 0) r.push_back(h_dart(i, j - 1) + 1);
      if (i > 0) r.push_back(v_dart(i - 1, j) + 1);
      rot.push_back(std::move(r));
    }
  }
  return from_rotations(rot);
}

/// Path with n >= 1 edges.
inline SphereMap make_path(int n) {
  SphereMap m = add_pendant_edge(SphereMap{}, -1);
  for (int i = 1; i < n; ++i) m = add_pendant_edge(m, static_cast<Dart>(2 * i - 1));
  return m;
}

/// Cycle with n >= 1 edges (n = 1 is a single loop, n = 2 a doubled edge).
inline SphereMap make_cycle(int n) {
  std::vector<std::vector<Dart>> rot;
  for (int i = 0; i < n; ++i) {
    Dart out = 2 * i, in = 2 * ((i + n - 1) % n) + 1;
    rot.push_back({out, in});
  }
  if (n == 1) return from_rotations({{0, 1}});
  return from_rotations(rot);
}

/// Two vertices joined by n parallel edges.
inline SphereMap make_dipole(int n) {
  std::vector<Dart> left, right;
  for (int i = 0; i < n; ++i) {
    left.push_back(2 * i);
    right.insert(right.begin(), 2 * i + 1);
  }
  return from_rotations({left, right});
}

}  // namespace sphereminor

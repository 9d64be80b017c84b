#pragma once

// Medial graphs, checkerboard colourings, good digraphs and their splits.
//
// medial(g) has darts 2d and 2d+1 for every dart d of g: the medial edge
// {2d, 2d+1} runs through the corner of g between d and sigma(d), from the
// medial vertex of edge(d) (dart 2d) to that of edge(sigma(d)) (dart 2d+1).
// Around the medial vertex of edge {d, a} the rotation is
//   2d, 2*sigma^-1(d)+1, 2a, 2*sigma^-1(a)+1.
// Odd darts trace the faces around vertices of g, even darts the faces of g.
//
// In a good digraph a dart is outgoing when the edge leaves its vertex. The
// faces traced by outgoing darts (face on the right of the traversal) are
// the black faces; directed_medial makes exactly the vertex faces black.

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/sphere_map.hpp"
#include "sphereminor/splice.hpp"

namespace sphereminor {

/// Medial map of g. The medial of the edgeless map has no darts.
inline SphereMap medial(const SphereMap& g) {
  const std::size_t n = g.dart_count();
  std::vector<Dart> s(2 * n), a(2 * n);
  for (Dart d = 0; static_cast<std::size_t>(d) < n; ++d) {
    const Dart x = g.sigma_inv(d);
    s[2 * d] = 2 * x + 1;
    s[2 * x + 1] = 2 * g.alpha(d);
    a[2 * d] = 2 * d + 1;
    a[2 * d + 1] = 2 * d;
  }
  return SphereMap::unchecked(std::move(s), std::move(a));
}

/// Dart of medial(g) sitting at the medial vertex of g's edge containing d.
inline Dart medial_vertex_dart(Dart d) { return 2 * d; }

enum class Colour : unsigned char { black, white };

struct Checkerboard {
  std::vector<Colour> colour;  // per face, indexed as faces()
  std::vector<int> face_of;    // per dart

  Colour of_dart(Dart d) const { return colour[face_of[d]]; }
  std::size_t count(Colour c) const {
    std::size_t n = 0;
    for (Colour x : colour) n += (x == c);
    return n;
  }
};

/// Proper 2-colouring of the faces, with the face of `black_seed` black.
inline Checkerboard checkerboard(const SphereMap& m, Dart black_seed = 0) {
  Checkerboard cb;
  cb.face_of = face_index(m);
  if (m.edgeless()) {
    cb.colour = {Colour::black};
    return cb;
  }
  const std::size_t nf = m.face_count();
  std::vector<int> col(nf, -1);
  // Faces adjacent across an edge: face(d) and face(alpha(d)).
  std::vector<std::vector<int>> adj(nf);
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d)
    adj[cb.face_of[d]].push_back(cb.face_of[m.alpha(d)]);
  std::vector<int> queue{cb.face_of[black_seed]};
  col[queue[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int f = queue[i];
    for (int g : adj[f]) {
      if (col[g] < 0) {
        col[g] = 1 - col[f];
        queue.push_back(g);
      } else if (col[g] == col[f]) {
        throw Error(Errc::not_face_bipartite, "faces sharing an edge get the same colour");
      }
    }
  }
  cb.colour.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) cb.colour[f] = col[f] == 0 ? Colour::black : Colour::white;
  return cb;
}

class GoodDigraph {
 public:
  /// The vertexless closed curve: directed medial graph of the edgeless map.
  GoodDigraph() = default;

  /// Throws Errc::not_good_digraph unless the pair satisfies every
  /// good-digraph condition.
  GoodDigraph(SphereMap map, std::vector<char> outgoing);

  static GoodDigraph unchecked(SphereMap map, std::vector<char> outgoing) {
    GoodDigraph g;
    g.map_ = std::move(map);
    g.out_ = std::move(outgoing);
    return g;
  }

  const SphereMap& map() const { return map_; }
  bool outgoing(Dart d) const { return out_[d] != 0; }
  std::span<const char> directions() const { return out_; }
  std::size_t vertex_count() const { return map_.edgeless() ? 0 : map_.vertex_count(); }
  bool is_free_curve() const { return map_.edgeless(); }

  /// Number of faces traced by outgoing (black) and incoming (white) darts.
  std::size_t black_faces() const { return count_faces(true); }
  std::size_t white_faces() const { return count_faces(false); }

  friend bool operator==(const GoodDigraph&, const GoodDigraph&) = default;

 private:
  std::size_t count_faces(bool out) const {
    if (map_.edgeless()) return 1;
    std::vector<char> seen(map_.dart_count(), 0);
    std::size_t n = 0;
    for (Dart s = 0; static_cast<std::size_t>(s) < map_.dart_count(); ++s) {
      if (seen[s] || outgoing(s) != out) continue;
      ++n;
      for (Dart d = s; !seen[d]; d = map_.phi(d)) seen[d] = 1;
    }
    return n;
  }

  SphereMap map_;
  std::vector<char> out_;
};

inline std::vector<std::string> validate_good_digraph(const SphereMap& m, std::span<const char> out) {
  std::vector<std::string> diags = validate(m);
  if (!diags.empty()) return diags;
  if (out.size() != m.dart_count()) return {"direction list does not cover every dart"};
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    if ((out[d] != 0) == (out[m.alpha(d)] != 0)) {
      diags.push_back("edge of dart " + std::to_string(d) + " is not directed consistently");
      break;
    }
  }
  for (const auto& rot : vertices(m)) {
    if (m.edgeless()) break;
    if (rot.size() != 4) {
      diags.push_back("vertex of dart " + std::to_string(rot[0]) + " has degree " + std::to_string(rot.size()));
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      if ((out[rot[i]] != 0) == (out[rot[(i + 1) % 4]] != 0)) {
        diags.push_back("rotation at vertex of dart " + std::to_string(rot[0]) +
                        " does not alternate in/out");
        break;
      }
    }
  }
  return diags;
}

inline GoodDigraph::GoodDigraph(SphereMap map, std::vector<char> outgoing)
    : map_(std::move(map)), out_(std::move(outgoing)) {
  auto diags = validate_good_digraph(map_, out_);
  if (!diags.empty()) throw Error(Errc::not_good_digraph, diags.front());
}

inline std::vector<std::string> validate(const GoodDigraph& d) {
  return validate_good_digraph(d.map(), d.directions());
}

/// Orients medial(g) so that every vertex face is traversed clockwise, i.e.
/// with the face on the right under counterclockwise rotations.
inline GoodDigraph directed_medial(const SphereMap& g) {
  SphereMap m = medial(g);
  std::vector<char> out(m.dart_count());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = static_cast<char>(x & 1);
  return GoodDigraph::unchecked(std::move(m), std::move(out));
}

struct UnderlyingGraph {
  SphereMap graph;
  /// digraph dart -> graph dart; -1 for incoming darts. The graph edge made
  /// from a digraph vertex carries the two outgoing darts of that vertex.
  std::vector<Dart> dart_of;
};

/// Recovers the plane graph with one vertex in every black face.
inline UnderlyingGraph underlying_plane_graph_with_map(const GoodDigraph& d) {
  auto diags = validate(d);
  if (!diags.empty()) throw Error(Errc::not_good_digraph, diags.front());
  UnderlyingGraph out;
  const SphereMap& m = d.map();
  out.dart_of.assign(m.dart_count(), -1);
  if (m.edgeless()) return out;
  Dart next = 0;
  for (Dart x = 0; static_cast<std::size_t>(x) < m.dart_count(); ++x)
    if (d.outgoing(x)) out.dart_of[x] = next++;
  std::vector<Dart> s(next), a(next);
  for (Dart x = 0; static_cast<std::size_t>(x) < m.dart_count(); ++x) {
    if (!d.outgoing(x)) continue;
    // sigma_g = phi^-1 on outgoing darts; alpha_g pairs the two outgoing
    // darts of a digraph vertex.
    s[out.dart_of[x]] = out.dart_of[m.alpha(m.sigma_inv(x))];
    a[out.dart_of[x]] = out.dart_of[m.sigma(m.sigma(x))];
  }
  out.graph = SphereMap(std::move(s), std::move(a));
  return out;
}

inline SphereMap underlying_plane_graph(const GoodDigraph& d) { return underlying_plane_graph_with_map(d).graph; }

enum class SplitKind {
  parallel,  // in1 -> out1, in2 -> out2
  cross,     // in1 -> out2, in2 -> out1
};

inline const char* split_kind_name(SplitKind k) { return k == SplitKind::parallel ? "parallel" : "cross"; }

/// Rotation of the vertex containing dart v, starting at an incoming dart.
inline std::array<Dart, 4> rotation_from_incoming(const GoodDigraph& d, Dart v) {
  Dart start = d.outgoing(v) ? d.map().sigma(v) : v;
  const SphereMap& m = d.map();
  return {start, m.sigma(start), m.sigma(m.sigma(start)), m.sigma_inv(start)};
}

/// Splits the vertex with index `vertex` (as in vertices()). Splitting the
/// last vertex can leave the vertexless closed curve.
inline GoodDigraph split(const GoodDigraph& d, int vertex, SplitKind kind) {
  if (d.is_free_curve() || vertex < 0 || static_cast<std::size_t>(vertex) >= d.vertex_count())
    throw Error(Errc::unknown_vertex, "vertex " + std::to_string(vertex));
  Dart at = vertices(d.map())[vertex].front();
  auto rot = rotation_from_incoming(d, at);
  // in1 out1 in2 out2: parallel joins positions 0-1 and 2-3, cross joins 1-2
  // and 3-0 (in2 -> out1, in1 -> out2).
  auto res = splice_vertex(d.map(), rot,
                           kind == SplitKind::parallel ? SplicePairing::first_second : SplicePairing::second_third);
  if (res.free_curve) return GoodDigraph{};
  std::vector<char> out(res.map.dart_count());
  for (std::size_t x = 0; x < res.old_to_new.size(); ++x)
    if (res.old_to_new[x] >= 0) out[res.old_to_new[x]] = d.directions()[x];
  return GoodDigraph::unchecked(std::move(res.map), std::move(out));
}

/// Canonical code with edge directions folded in. A reflection moves the
/// black faces to the left of their boundary walks, so the reflective code
/// pairs the mirror image with all directions reversed; keeping directions
/// would identify DM(g) with DM of g's mirrored dual (K2 with the loop).
inline CanonicalCode canonical_form(const GoodDigraph& d, Orientation mode = Orientation::reflective) {
  if (d.is_free_curve()) return CanonicalCode{{-1}, mode};
  std::vector<int> tags(d.directions().begin(), d.directions().end());
  CanonicalCode best = canonical_form(d.map(), Orientation::oriented, tags);
  if (mode == Orientation::reflective) {
    for (int& t : tags) t = 1 - t;
    CanonicalCode m = canonical_form(mirror(d.map()), Orientation::oriented, tags);
    if (m.code < best.code) best = std::move(m);
  }
  best.mode = mode;
  return best;
}

inline bool equivalent(const GoodDigraph& a, const GoodDigraph& b, Orientation mode = Orientation::reflective) {
  return a.vertex_count() == b.vertex_count() && canonical_form(a, mode) == canonical_form(b, mode);
}

/// True iff some sequence of connectivity-preserving splits takes source to
/// a digraph equivalent to target. Depth-first over canonical codes; splits
/// never increase the vertex count or either face-colour count, which bounds
/// the search.
inline bool split_reachable(const GoodDigraph& target, const GoodDigraph& source,
                            Orientation mode = Orientation::reflective) {
  const std::size_t tv = target.vertex_count();
  const std::size_t tb = target.black_faces(), tw = target.white_faces();
  if (source.vertex_count() < tv) return false;
  const CanonicalCode goal = canonical_form(target, mode);
  std::unordered_set<CanonicalCode, CanonicalCodeHash> visited;
  std::vector<GoodDigraph> stack{source};
  visited.insert(canonical_form(source, mode));
  while (!stack.empty()) {
    GoodDigraph cur = std::move(stack.back());
    stack.pop_back();
    if (cur.vertex_count() == tv) {
      if (canonical_form(cur, mode) == goal) return true;
      continue;
    }
    for (int v = 0; static_cast<std::size_t>(v) < cur.vertex_count(); ++v) {
      for (SplitKind k : {SplitKind::parallel, SplitKind::cross}) {
        GoodDigraph next;
        try {
          next = split(cur, v, k);
        } catch (const Error& e) {
          if (e.code() == Errc::would_disconnect) continue;
          throw;
        }
        if (next.black_faces() < tb || next.white_faces() < tw) continue;
        if (visited.insert(canonical_form(next, mode)).second) stack.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace sphereminor

#pragma once

// Link diagrams on the sphere: a connected 4-regular map (the projection)
// whose vertices are crossings, each marking which pair of opposite
// half-edges passes over.
//
// Faces are coloured by the checkerboard with the face of dart 0 black (the
// face on the right when leaving along dart 0). The black Tait graph has a
// vertex in every black face and an edge through every crossing; the white
// one is its dual.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/medial_digraph.hpp"
#include "sphereminor/sphere_map.hpp"
#include "sphereminor/splice.hpp"

namespace sphereminor {

struct Crossing {
  std::array<Dart, 4> darts{};  // counterclockwise
  bool over_first = true;       // darts[0], darts[2] pass over; else darts[1], darts[3]

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class LinkDiagram {
 public:
  /// The crossingless diagram of a single round circle.
  LinkDiagram() = default;

  /// strand[d] is the dart at the other end of the arc leaving through d.
  /// Throws Errc::invalid_diagram if the data is not a connected diagram.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<Dart> strand)
      : crossings_(std::move(crossings)), strand_(std::move(strand)) {
    auto diags = check();
    if (!diags.empty()) throw Error(Errc::invalid_diagram, diags.front());
    build_projection();
  }

  std::size_t crossing_count() const { return crossings_.size(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t c) const { return crossings_[c]; }
  Dart strand(Dart d) const { return strand_[d]; }
  std::span<const Dart> strands() const { return strand_; }

  /// The projection as a sphere map; the crossingless diagram projects to
  /// the edgeless map.
  const SphereMap& projection() const { return projection_; }

  /// 1 on darts of over-strands.
  std::vector<int> over_tags() const {
    std::vector<int> t(strand_.size(), 0);
    for (const auto& c : crossings_) {
      const int base = c.over_first ? 0 : 1;
      t[c.darts[base]] = t[c.darts[base + 2]] = 1;
    }
    return t;
  }

  /// crossing index of each dart.
  std::vector<int> crossing_of() const {
    std::vector<int> out(strand_.size(), -1);
    for (std::size_t c = 0; c < crossings_.size(); ++c)
      for (Dart d : crossings_[c].darts) out[d] = static_cast<int>(c);
    return out;
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.strand_ == b.strand_;
  }

 private:
  std::vector<std::string> check() const {
    const std::size_t n = crossings_.size() * 4;
    if (strand_.size() != n) return {"strand pairing does not cover 4 darts per crossing"};
    std::vector<char> seen(n, 0);
    for (const auto& c : crossings_) {
      for (Dart d : c.darts) {
        if (d < 0 || static_cast<std::size_t>(d) >= n) return {"crossing dart " + std::to_string(d) + " out of range"};
        if (seen[d]) return {"dart " + std::to_string(d) + " used by two crossing slots"};
        seen[d] = 1;
      }
    }
    std::vector<Dart> sigma(n);
    for (const auto& c : crossings_)
      for (int i = 0; i < 4; ++i) sigma[c.darts[i]] = c.darts[(i + 1) % 4];
    return validate(sigma, strand_);
  }

  void build_projection() {
    std::vector<Dart> sigma(strand_.size());
    for (const auto& c : crossings_)
      for (int i = 0; i < 4; ++i) sigma[c.darts[i]] = c.darts[(i + 1) % 4];
    projection_ = SphereMap(std::move(sigma), strand_);
  }

  std::vector<Crossing> crossings_;
  std::vector<Dart> strand_;
  SphereMap projection_;
};

inline const SphereMap& projection(const LinkDiagram& d) { return d.projection(); }

/// Builds a diagram on a 4-regular map; crossing i is the vertex i of
/// vertices(m) with its rotation starting at the listed dart.
inline LinkDiagram diagram_from_map(const SphereMap& m, const std::vector<bool>& over_first) {
  std::vector<Crossing> cs;
  for (const auto& rot : vertices(m)) {
    if (m.edgeless()) break;
    if (rot.size() != 4) throw Error(Errc::invalid_diagram, "projection is not 4-regular");
    Crossing c;
    std::copy(rot.begin(), rot.end(), c.darts.begin());
    c.over_first = over_first.empty() ? true : static_cast<bool>(over_first[cs.size()]);
    cs.push_back(c);
  }
  return LinkDiagram(std::move(cs), std::vector<Dart>(m.alpha_perm().begin(), m.alpha_perm().end()));
}

/// The alternating diagram with projection medial(g). Its over-strands are
/// the darts running along faces of g, so walking any strand the crossings
/// alternate over and under.
inline LinkDiagram alternating_diagram(const SphereMap& g) {
  SphereMap m = medial(g);
  if (m.edgeless()) return LinkDiagram{};
  std::vector<Crossing> cs;
  for (auto rot : vertices(m)) {
    // Rotate so the listing starts at an even dart; evens sit at positions
    // 0 and 2.
    if (rot[0] % 2 != 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    Crossing c;
    std::copy(rot.begin(), rot.end(), c.darts.begin());
    c.over_first = true;
    cs.push_back(c);
  }
  return LinkDiagram(std::move(cs), std::vector<Dart>(m.alpha_perm().begin(), m.alpha_perm().end()));
}

/// 1-crossing diagram of the unknot (figure-eight curve).
inline LinkDiagram one_crossing_unknot() { return alternating_diagram(make_path(1)); }

/// The standard alternating 3-crossing trefoil diagram.
inline LinkDiagram trefoil_diagram() { return alternating_diagram(make_cycle(3)); }

inline LinkDiagram exchange(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || static_cast<std::size_t>(crossing) >= d.crossing_count())
    throw Error(Errc::unknown_crossing, "crossing " + std::to_string(crossing));
  auto cs = d.crossings();
  cs[crossing].over_first = !cs[crossing].over_first;
  return LinkDiagram(std::move(cs), std::vector<Dart>(d.strands().begin(), d.strands().end()));
}

enum class SmoothKind {
  black_delete,  // the black Tait graph loses its edge, the white one contracts it
  white_delete,
};

inline const char* smooth_kind_name(SmoothKind k) {
  return k == SmoothKind::black_delete ? "black_delete" : "white_delete";
}

/// Per-dart outgoing flags for the checkerboard: a dart is outgoing when the
/// face on its right is black.
inline std::vector<char> black_orientation(const SphereMap& projection) {
  Checkerboard cb = checkerboard(projection, 0);
  std::vector<char> out(projection.dart_count());
  for (Dart x = 0; static_cast<std::size_t>(x) < out.size(); ++x) out[x] = cb.of_dart(x) == Colour::black;
  return out;
}

/// Replaces a crossing by one of its two planar reconnections. Throws
/// Errc::would_disconnect when the result would not be connected.
inline LinkDiagram smooth(const LinkDiagram& d, int crossing, SmoothKind kind) {
  if (crossing < 0 || static_cast<std::size_t>(crossing) >= d.crossing_count())
    throw Error(Errc::unknown_crossing, "crossing " + std::to_string(crossing));
  const auto& rot = d.crossing(crossing).darts;
  const auto black = black_orientation(d.projection());
  // The corner between rot[0] and rot[1] lies on the face of rot[1]. Joining
  // rot[0]-rot[1] keeps that corner cut off from its opposite corner and
  // merges the other two.
  const bool corner01_black = black[rot[1]] != 0;
  const bool keep_black_apart = kind == SmoothKind::black_delete;
  const SplicePairing pairing = corner01_black == keep_black_apart ? SplicePairing::first_second
                                                                   : SplicePairing::second_third;
  auto res = splice_vertex(d.projection(), rot, pairing);
  if (res.free_curve) return LinkDiagram{};
  std::vector<Crossing> cs;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (static_cast<int>(c) == crossing) continue;
    Crossing nc = d.crossing(c);
    for (Dart& x : nc.darts) x = res.old_to_new[x];
    cs.push_back(nc);
  }
  return LinkDiagram(std::move(cs), std::vector<Dart>(res.map.alpha_perm().begin(), res.map.alpha_perm().end()));
}

struct TaitPair {
  SphereMap black;
  SphereMap white;
  /// Per crossing, the dart of the black and of the white Tait graph on the
  /// edge through that crossing (-1 for the crossingless diagram).
  std::vector<Dart> black_edge, white_edge;
};

inline TaitPair tait_graphs(const LinkDiagram& d) {
  TaitPair t;
  if (d.crossing_count() == 0) return t;
  auto out = black_orientation(d.projection());
  auto b = underlying_plane_graph_with_map(GoodDigraph::unchecked(d.projection(), out));
  for (auto& x : out) x = !x;
  auto w = underlying_plane_graph_with_map(GoodDigraph::unchecked(d.projection(), out));
  t.black = std::move(b.graph);
  t.white = std::move(w.graph);
  for (const auto& c : d.crossings()) {
    Dart bd = -1, wd = -1;
    for (Dart x : c.darts) {
      if (b.dart_of[x] >= 0) bd = b.dart_of[x];
      if (w.dart_of[x] >= 0) wd = w.dart_of[x];
    }
    t.black_edge.push_back(bd);
    t.white_edge.push_back(wd);
  }
  return t;
}

/// Unordered comparison of Tait pairs.
inline bool same_tait_pair(const SphereMap& a1, const SphereMap& a2, const SphereMap& b1, const SphereMap& b2,
                           Orientation mode = Orientation::reflective) {
  return (equivalent(a1, b1, mode) && equivalent(a2, b2, mode)) ||
         (equivalent(a1, b2, mode) && equivalent(a2, b1, mode));
}

inline bool same_tait_pair(const TaitPair& a, const TaitPair& b, Orientation mode = Orientation::reflective) {
  return same_tait_pair(a.black, a.white, b.black, b.white, mode);
}

/// Diagram code: the projection's code with over-strand darts tagged.
inline CanonicalCode canonical_form(const LinkDiagram& d, Orientation mode = Orientation::oriented) {
  if (d.crossing_count() == 0) return CanonicalCode{{-1}, mode};
  auto tags = d.over_tags();
  return canonical_form(d.projection(), mode, tags);
}

inline bool equivalent(const LinkDiagram& a, const LinkDiagram& b, Orientation mode = Orientation::oriented) {
  return a.crossing_count() == b.crossing_count() && canonical_form(a, mode) == canonical_form(b, mode);
}

}  // namespace sphereminor

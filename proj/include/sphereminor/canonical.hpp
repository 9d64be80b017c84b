#pragma once

// Canonical codes for sphere maps. For every starting dart (and, in
// reflective mode, for the mirror image too) the darts are numbered in
// breadth-first order following sigma then alpha; the code lists, per dart
// in that order, the numbers of its sigma and alpha images plus an optional
// per-dart tag. The lexicographically smallest such listing is the code.
// Cost is O(E^2) per map.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sphereminor/sphere_map.hpp"

namespace sphereminor {

enum class Orientation { oriented, reflective };

inline const char* orientation_name(Orientation o) {
  return o == Orientation::oriented ? "oriented" : "reflective";
}

struct CanonicalCode {
  std::vector<int> code;
  Orientation mode = Orientation::reflective;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    return a.code <=> b.code;
  }
};

struct CanonicalLabelling {
  CanonicalCode code;
  std::vector<Dart> order;  // darts in canonical-label order
  bool mirrored = false;
};

namespace detail {

class Canonicalizer {
 public:
  Canonicalizer(const SphereMap& m, std::span<const int> tags) : m_(m), tags_(tags) {
    label_.assign(m.dart_count(), -1);
    order_.reserve(m.dart_count());
  }

  // Runs every start in one orientation, keeping the running minimum in best.
  void run(bool mirrored, std::vector<int>& best, std::vector<Dart>& best_order, bool& best_mirrored,
           bool& have_best) {
    const std::size_t n = m_.dart_count();
    const std::size_t width = tags_.empty() ? 2 : 3;
    std::vector<int> cur;
    cur.reserve(n * width + 1);
    for (Dart start = 0; static_cast<std::size_t>(start) < n; ++start) {
      std::fill(label_.begin(), label_.end(), -1);
      order_.clear();
      cur.clear();
      cur.push_back(static_cast<int>(n));
      label_[start] = 0;
      order_.push_back(start);
      // 0: undecided so far, -1: cur is smaller, +1: cur is larger (abort)
      int cmp = have_best ? 0 : -1;
      std::size_t pos = 1;
      for (std::size_t i = 0; i < order_.size() && cmp <= 0; ++i) {
        const Dart d = order_[i];
        const Dart s = mirrored ? m_.sigma_inv(d) : m_.sigma(d);
        const Dart a = m_.alpha(d);
        for (Dart e : {s, a}) {
          if (label_[e] < 0) {
            label_[e] = static_cast<int>(order_.size());
            order_.push_back(e);
          }
          cur.push_back(label_[e]);
        }
        if (width == 3) cur.push_back(tags_[d]);
        if (cmp == 0) {
          for (; pos < cur.size(); ++pos) {
            if (cur[pos] != best[pos]) {
              cmp = cur[pos] < best[pos] ? -1 : 1;
              break;
            }
          }
        }
      }
      if (cmp < 0) {
        best = cur;
        best_order = order_;
        best_mirrored = mirrored;
        have_best = true;
      }
    }
  }

 private:
  const SphereMap& m_;
  std::span<const int> tags_;
  std::vector<int> label_;
  std::vector<Dart> order_;
};

}  // namespace detail

/// Canonical labelling with per-dart tags folded into the code. Tags must be
/// invariant under the equivalences being tested (e.g. edge directions).
inline CanonicalLabelling canonical_labelling(const SphereMap& m, Orientation mode,
                                              std::span<const int> tags = {}) {
  CanonicalLabelling out;
  out.code.mode = mode;
  if (m.edgeless()) {
    out.code.code = {0};
    return out;
  }
  detail::Canonicalizer c(m, tags);
  bool have = false;
  c.run(false, out.code.code, out.order, out.mirrored, have);
  if (mode == Orientation::reflective) c.run(true, out.code.code, out.order, out.mirrored, have);
  return out;
}

inline CanonicalCode canonical_form(const SphereMap& m, Orientation mode = Orientation::reflective,
                                    std::span<const int> tags = {}) {
  return canonical_labelling(m, mode, tags).code;
}

inline bool equivalent(const SphereMap& a, const SphereMap& b, Orientation mode = Orientation::reflective) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count() ||
      a.face_count() != b.face_count())
    return false;
  return canonical_form(a, mode) == canonical_form(b, mode);
}

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.mode) * 0x9e3779b97f4a7c15ull;
    for (int x : c.code) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace sphereminor

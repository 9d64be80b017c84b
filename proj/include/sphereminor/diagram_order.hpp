#pragma once

// The diagram order A <| B (A is reached from B by crossing exchanges and
// smoothings) decided through Tait graphs, a direct search oracle for it,
// and the "leads to a link" test over a finite witness set.

#include <deque>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/link_diagram.hpp"
#include "sphereminor/minor_engine.hpp"

namespace sphereminor {

inline constexpr int kDefaultDiagramCap = 6;

struct DiagramOrderOptions {
  /// Equivalence used when comparing Tait graphs.
  Orientation tait_mode = Orientation::oriented;
  std::uint64_t node_cap = kDefaultNodeCap;
};

/// Decides a <| b: black(a) is a sphere minor of black(b) or of white(b).
/// Checking one colour of a suffices since minors dualize.
inline bool diagram_leq(const LinkDiagram& a, const LinkDiagram& b, DiagramOrderOptions opt = {}) {
  if (a.crossing_count() > b.crossing_count()) return false;
  const TaitPair ta = tait_graphs(a);
  const TaitPair tb = tait_graphs(b);
  MinorOptions mo{opt.tait_mode, opt.node_cap};
  return is_sphere_minor(ta.black, tb.black, mo).result || is_sphere_minor(ta.black, tb.white, mo).result;
}

/// Codes of every diagram reachable from d by exchanges and connected
/// smoothings (d included), breadth first.
inline std::unordered_set<CanonicalCode, CanonicalCodeHash> reachable_diagrams(
    const LinkDiagram& d, Orientation mode = Orientation::oriented, int cap = kDefaultDiagramCap,
    std::size_t min_crossings = 0) {
  if (static_cast<int>(d.crossing_count()) > cap)
    throw Error(Errc::cap_exceeded, "diagram has " + std::to_string(d.crossing_count()) + " crossings, cap is " +
                                        std::to_string(cap));
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen{canonical_form(d, mode)};
  std::deque<LinkDiagram> queue{d};
  auto push = [&](LinkDiagram&& next) {
    if (next.crossing_count() < min_crossings) return;
    if (seen.insert(canonical_form(next, mode)).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    LinkDiagram cur = std::move(queue.front());
    queue.pop_front();
    for (int c = 0; static_cast<std::size_t>(c) < cur.crossing_count(); ++c) {
      push(exchange(cur, c));
      for (SmoothKind k : {SmoothKind::black_delete, SmoothKind::white_delete}) {
        try {
          push(smooth(cur, c, k));
        } catch (const Error& e) {
          if (e.code() != Errc::would_disconnect) throw;
        }
      }
    }
  }
  return seen;
}

/// Oracle for a <| b by direct search over exchange/smoothing sequences.
inline bool diagram_leq_bruteforce(const LinkDiagram& a, const LinkDiagram& b,
                                   Orientation mode = Orientation::oriented, int cap = kDefaultDiagramCap) {
  if (a.crossing_count() > b.crossing_count()) return false;
  return reachable_diagrams(b, mode, cap, a.crossing_count()).count(canonical_form(a, mode)) > 0;
}

struct WitnessSet {
  std::string link_name;
  std::vector<LinkDiagram> diagrams;
};

/// D leads to the witness set's link iff some listed diagram C has C <| D.
/// Only the reduction is checked; the set itself is taken on trust.
inline bool leadsto(const LinkDiagram& d, const WitnessSet& w, DiagramOrderOptions opt = {}) {
  if (w.diagrams.empty()) throw Error(Errc::empty_witness_set, "witness set '" + w.link_name + "' is empty");
  for (const auto& c : w.diagrams)
    if (diagram_leq(c, d, opt)) return true;
  return false;
}

/// True iff some exchange/smoothing sequence from d reaches a diagram
/// equivalent to one of the targets.
inline bool leadsto_target_search(const LinkDiagram& d, const std::vector<LinkDiagram>& targets,
                                  Orientation mode = Orientation::oriented, int cap = kDefaultDiagramCap) {
  std::size_t fewest = d.crossing_count() + 1;
  for (const auto& t : targets) fewest = std::min(fewest, t.crossing_count());
  if (fewest > d.crossing_count()) return false;
  auto reach = reachable_diagrams(d, mode, cap, fewest);
  for (const auto& t : targets)
    if (reach.count(canonical_form(t, mode))) return true;
  return false;
}

}  // namespace sphereminor

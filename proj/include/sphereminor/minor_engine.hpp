#pragma once

// Sphere-minor containment through sphere models.
//
// A model of a pattern in a host is a set of host edges split into c-edges,
// which form one tree per pattern vertex (its branch set), and m-edges, one
// per pattern edge. Contracting the c-edges in the sphere must give a map
// equivalent to the pattern. Contracting a tree merges rotations in the
// order of a walk around the tree, so the rotation of a pattern vertex must
// appear, in order, as the m-edge ends met while walking around its branch
// tree.
//
// is_sphere_minor builds branch trees by walking around them: the walk
// starts at an m-edge end and, at every undecided host dart it meets, decides
// whether that dart ends the next pattern edge, is deleted, or extends the
// tree. Branch sets are completed one pattern vertex at a time in discovery
// order. Subtrees that carry no m-edge end are never kept (deleting them
// gives the same contraction), so only minimal models are explored.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/sphere_map.hpp"

namespace sphereminor {

struct SphereModel {
  SphereMap host;
  std::vector<Dart> sub_edges;  // edge names (smaller dart) in the host
  std::vector<Dart> c_edges;    // subset of sub_edges

  std::vector<Dart> m_edges() const {
    std::vector<Dart> out;
    for (Dart e : sub_edges)
      if (std::find(c_edges.begin(), c_edges.end(), e) == c_edges.end()) out.push_back(e);
    return out;
  }
};

struct MinorAnswer {
  bool result = false;
  std::optional<SphereModel> witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;
inline constexpr int kDefaultBruteForceCap = 8;

struct MinorOptions {
  Orientation mode = Orientation::reflective;
  std::uint64_t node_cap = kDefaultNodeCap;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Restricts host to the edges flagged in `in_sub` and contracts those flagged
// in `in_c`. Returns nullopt when the restriction is disconnected. The c-edges
// must form a forest.
inline std::optional<SphereMap> contract_submap(const SphereMap& host, const std::vector<char>& in_sub,
                                                const std::vector<char>& in_c) {
  const std::size_t n = host.dart_count();
  RawMap raw(host);
  bool any = false;
  for (std::size_t d = 0; d < n; ++d) {
    raw.alive[d] = in_sub[edge_of(host, static_cast<Dart>(d))];
    any = any || raw.alive[d];
  }
  if (!any) return SphereMap{};
  for (std::size_t d = 0; d < n; ++d) {
    if (!raw.alive[d]) continue;
    Dart t = host.sigma(static_cast<Dart>(d));
    while (!raw.alive[t]) t = host.sigma(t);
    raw.sigma[d] = t;
  }
  if (!raw.live_connected()) return std::nullopt;
  for (std::size_t d = 0; d < n; ++d) {
    if (raw.alive[d] && in_c[d] && static_cast<Dart>(d) < host.alpha(static_cast<Dart>(d))) raw.contract(static_cast<Dart>(d));
  }
  return raw.compact();
}

}  // namespace detail

/// Restricts the host to the model's edges, contracts the c-edges in the
/// sphere, and compares with the pattern. A disconnected restriction never
/// matches. An empty edge set restricts to the single vertex.
inline bool verify_model(const SphereModel& model, const SphereMap& pattern,
                         Orientation mode = Orientation::reflective) {
  const SphereMap& host = model.host;
  const std::size_t n = host.dart_count();
  std::vector<char> in_sub(n, 0), in_c(n, 0);
  for (Dart e : model.sub_edges) {
    if (!host.contains(e) || edge_of(host, e) != e)
      throw Error(Errc::invalid_model, "sub edge " + std::to_string(e) + " is not a host edge name");
    if (in_sub[e]) throw Error(Errc::invalid_model, "sub edge " + std::to_string(e) + " listed twice");
    in_sub[e] = 1;
  }
  auto vidx = vertex_index(host);
  detail::UnionFind uf(host.vertex_count());
  for (Dart e : model.c_edges) {
    if (!host.contains(e) || !in_sub[e] || edge_of(host, e) != e)
      throw Error(Errc::invalid_model, "c edge " + std::to_string(e) + " is not a sub edge");
    if (in_c[e]) throw Error(Errc::invalid_model, "c edge " + std::to_string(e) + " listed twice");
    if (!uf.unite(vidx[e], vidx[host.alpha(e)]))
      throw Error(Errc::invalid_model, "c edges contain a cycle");
    in_c[e] = in_c[host.alpha(e)] = 1;
  }
  auto contracted = detail::contract_submap(host, in_sub, in_c);
  if (!contracted) return false;
  return equivalent(*contracted, pattern, mode);
}

namespace detail {

class ModelSearch {
 public:
  ModelSearch(const SphereMap& pattern, bool mirrored, const SphereMap& host, std::uint64_t node_cap,
              std::uint64_t& nodes)
      : host_(host), node_cap_(node_cap), nodes_(nodes) {
    const Dart pn = static_cast<Dart>(pattern.dart_count());
    psigma_.resize(pn);
    palpha_.resize(pn);
    for (Dart p = 0; p < pn; ++p) {
      psigma_[p] = mirrored ? pattern.sigma_inv(p) : pattern.sigma(p);
      palpha_[p] = pattern.alpha(p);
    }
    pvertex_ = vertex_index(pattern);
    const int pv = static_cast<int>(pattern.vertex_count());
    prot_.assign(pv, {});
    ppos_.assign(pn, 0);
    std::vector<char> seen(pn, 0);
    for (Dart s = 0; s < pn; ++s) {
      if (seen[s]) continue;
      auto& rot = prot_[pvertex_[s]];
      for (Dart d = s; !seen[d]; d = psigma_[d]) {
        seen[d] = 1;
        ppos_[d] = static_cast<int>(rot.size());
        rot.push_back(d);
      }
    }
    hvertex_ = vertex_index(host);
    const std::size_t hn = host.dart_count();
    dec_.assign(hn, kUndecided);
    pm_.assign(hn, -1);
    kout_.assign(hn, -1);
    hmatch_.assign(pn, -1);
    owner_.assign(host.vertex_count(), -1);
    intree_.assign(host.vertex_count(), 0);
    pstate_.assign(pv, kUnseen);
    start_of_.assign(pv, -1);
  }

  /// Tries every host dart (in the given order) as the image of the first
  /// dart of the root pattern vertex.
  bool run(const std::vector<Dart>& host_order) {
    int root = 0;
    for (int x = 0; x < static_cast<int>(prot_.size()); ++x)
      if (prot_[x].size() > prot_[root].size()) root = x;
    const Dart p0 = prot_[root][0];
    for (Dart z0 : host_order) {
      const int w = hvertex_[z0];
      owner_[w] = root;
      pstate_[root] = kQueued;
      order_.assign(1, root);
      start_of_[root] = z0;
      Undo u;
      if (try_mark(root, z0, p0, u)) {
        if (process(0)) return true;
        undo(u);
      }
      owner_[w] = -1;
      pstate_[root] = kUnseen;
      order_.clear();
    }
    return false;
  }

  SphereModel witness() const {
    SphereModel m;
    m.host = host_;
    for (Dart d = 0; static_cast<std::size_t>(d) < host_.dart_count(); ++d) {
      if (d > host_.alpha(d)) continue;
      if (dec_[d] == kTree || dec_[d] == kMatched) m.sub_edges.push_back(d);
      if (dec_[d] == kTree) m.c_edges.push_back(d);
    }
    return m;
  }

 private:
  enum : char { kUndecided, kDeleted, kTree, kMatched };
  enum : char { kUnseen, kQueued, kDone };

  struct Undo {
    Dart z = -1;
    int w = -1;
    int prev_owner = -1;
    bool queued = false;
  };

  void tick() {
    if (++nodes_ > node_cap_)
      throw Error(Errc::search_budget_exceeded, "node cap " + std::to_string(node_cap_) + " reached");
  }

  Dart expected(int x, int k) const {
    const auto& rot = prot_[x];
    const Dart first = pm_[start_of_[x]];
    return rot[(ppos_[first] + k) % rot.size()];
  }

  // Makes host dart z (at a vertex of branch x) the end of pattern dart q.
  bool try_mark(int x, Dart z, Dart q, Undo& u) {
    const Dart az = host_.alpha(z), aq = palpha_[q];
    const int y = pvertex_[aq];
    const int w2 = hvertex_[az];
    if (hmatch_[q] >= 0 || hmatch_[aq] >= 0) return false;
    if (owner_[w2] != -1 && owner_[w2] != y) return false;
    if (y != x && pstate_[y] == kDone) return false;
    dec_[z] = dec_[az] = kMatched;
    pm_[z] = q;
    pm_[az] = aq;
    hmatch_[q] = z;
    hmatch_[aq] = az;
    u = Undo{z, w2, owner_[w2], false};
    owner_[w2] = y;
    if (y != x && pstate_[y] == kUnseen) {
      pstate_[y] = kQueued;
      start_of_[y] = az;
      order_.push_back(y);
      u.queued = true;
    }
    return true;
  }

  void undo(const Undo& u) {
    const Dart az = host_.alpha(u.z);
    if (u.queued) {
      const int y = order_.back();
      order_.pop_back();
      pstate_[y] = kUnseen;
      start_of_[y] = -1;
    }
    owner_[u.w] = u.prev_owner;
    hmatch_[pm_[u.z]] = -1;
    hmatch_[pm_[az]] = -1;
    pm_[u.z] = pm_[az] = -1;
    dec_[u.z] = dec_[az] = kUndecided;
  }

  bool process(std::size_t head) {
    if (head == order_.size()) return true;
    const int x = order_[head];
    const Dart s = start_of_[x];
    const int w = hvertex_[s];
    intree_[w] = 1;
    const bool ok = walk(x, head, s, s, 1);
    if (!ok) intree_[w] = 0;
    return ok;
  }

  // Continues the walk around branch tree x from dart y, with k pattern darts
  // of x matched so far.
  bool walk(int x, std::size_t head, Dart start, Dart y, int k) {
    tick();
    const int deg = static_cast<int>(prot_[x].size());
    Dart z;
    while (true) {
      z = host_.sigma(y);
      if (z == start) {
        if (k != deg) return false;
        pstate_[x] = kDone;
        if (process(head + 1)) return true;
        pstate_[x] = kQueued;
        return false;
      }
      const char dz = dec_[z];
      if (dz == kUndecided) break;
      if (dz == kTree) {
        // Coming back towards the root of the tree; a subtree without any
        // m-edge end is redundant.
        const Dart parent = host_.alpha(z);
        if (kout_[parent] == k) return false;
        y = parent;
      } else if (dz == kDeleted) {
        y = z;
      } else {
        if (k >= deg || pm_[z] != expected(x, k)) return false;
        ++k;
        y = z;
      }
    }
    const Dart az = host_.alpha(z);
    if (k < deg) {
      const Dart q = expected(x, k);
      Undo u;
      if (hmatch_[q] < 0 && try_mark(x, z, q, u)) {
        if (walk(x, head, start, z, k + 1)) return true;
        undo(u);
      }
    }
    dec_[z] = dec_[az] = kDeleted;
    if (walk(x, head, start, z, k)) return true;
    dec_[z] = dec_[az] = kUndecided;
    const int w2 = hvertex_[az];
    if (!intree_[w2] && (owner_[w2] == -1 || owner_[w2] == x)) {
      const int prev = owner_[w2];
      dec_[z] = dec_[az] = kTree;
      intree_[w2] = 1;
      owner_[w2] = x;
      kout_[z] = k;
      if (walk(x, head, start, az, k)) return true;
      kout_[z] = -1;
      owner_[w2] = prev;
      intree_[w2] = 0;
      dec_[z] = dec_[az] = kUndecided;
    }
    return false;
  }

  const SphereMap& host_;
  std::uint64_t node_cap_;
  std::uint64_t& nodes_;

  std::vector<Dart> psigma_, palpha_;
  std::vector<int> pvertex_;
  std::vector<std::vector<Dart>> prot_;
  std::vector<int> ppos_;

  std::vector<int> hvertex_;
  std::vector<char> dec_;
  std::vector<Dart> pm_;
  std::vector<int> kout_;
  std::vector<Dart> hmatch_;
  std::vector<int> owner_;
  std::vector<char> intree_;
  std::vector<char> pstate_;
  std::vector<Dart> start_of_;
  std::vector<int> order_;
};

inline SphereModel spanning_tree_model(const SphereMap& host) {
  SphereModel m;
  m.host = host;
  auto vidx = vertex_index(host);
  UnionFind uf(host.vertex_count());
  for (Dart e : edges(host)) {
    if (uf.unite(vidx[e], vidx[host.alpha(e)])) {
      m.sub_edges.push_back(e);
      m.c_edges.push_back(e);
    }
  }
  return m;
}

}  // namespace detail

/// Decides whether pattern is a sphere minor of host and returns a model when
/// it is. Throws Errc::search_budget_exceeded past options.node_cap search
/// nodes.
inline MinorAnswer is_sphere_minor(const SphereMap& pattern, const SphereMap& host, MinorOptions options = {}) {
  MinorAnswer ans;
  if (pattern.edge_count() > host.edge_count() || pattern.vertex_count() > host.vertex_count() ||
      pattern.face_count() > host.face_count())
    return ans;
  if (pattern.edgeless()) {
    ans.result = true;
    ans.witness = detail::spanning_tree_model(host);
    return ans;
  }
  const std::vector<Dart> host_order = canonical_labelling(host, Orientation::reflective).order;
  for (bool mirrored : {false, true}) {
    if (mirrored && options.mode == Orientation::oriented) break;
    detail::ModelSearch search(pattern, mirrored, host, options.node_cap, ans.nodes);
    if (search.run(host_order)) {
      ans.result = true;
      ans.witness = search.witness();
      return ans;
    }
  }
  return ans;
}

namespace detail {

// Calls visit(contracted map) for every model on the host: each edge is left
// out, kept as an m-edge, or kept as a c-edge, with the c-edges a forest.
template <class Visit>
bool for_each_model(const SphereMap& host, int cap, Visit&& visit) {
  if (static_cast<int>(host.edge_count()) > cap)
    throw Error(Errc::cap_exceeded, "host has " + std::to_string(host.edge_count()) + " edges, cap is " +
                                        std::to_string(cap));
  const std::vector<Dart> es = edges(host);
  const std::size_t n = host.dart_count();
  const auto vidx = vertex_index(host);
  std::vector<int> state(es.size(), 0);
  std::vector<char> in_sub(n, 0), in_c(n, 0);
  while (true) {
    std::fill(in_sub.begin(), in_sub.end(), 0);
    std::fill(in_c.begin(), in_c.end(), 0);
    UnionFind uf(host.vertex_count());
    bool forest = true;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (state[i] == 0) continue;
      in_sub[es[i]] = 1;
      if (state[i] == 2) {
        in_c[es[i]] = in_c[host.alpha(es[i])] = 1;
        if (!uf.unite(vidx[es[i]], vidx[host.alpha(es[i])])) forest = false;
      }
    }
    if (forest) {
      auto m = contract_submap(host, in_sub, in_c);
      if (m && visit(*m)) return true;
    }
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) return false;
    ++state[i];
  }
}

}  // namespace detail

/// Exhaustive oracle: tries every sub-edge set and every c/m split of it.
inline bool brute_force_minor(const SphereMap& pattern, const SphereMap& host,
                              Orientation mode = Orientation::reflective, int cap = kDefaultBruteForceCap) {
  const CanonicalCode goal = canonical_form(pattern, mode);
  return detail::for_each_model(host, cap, [&](const SphereMap& m) {
    return m.dart_count() == pattern.dart_count() && canonical_form(m, mode) == goal;
  });
}

/// Codes of every sphere minor of host, by the same exhaustive enumeration.
inline std::unordered_set<CanonicalCode, CanonicalCodeHash> minor_closure(
    const SphereMap& host, Orientation mode = Orientation::reflective, int cap = kDefaultBruteForceCap) {
  std::unordered_set<CanonicalCode, CanonicalCodeHash> out;
  detail::for_each_model(host, cap, [&](const SphereMap& m) {
    out.insert(canonical_form(m, mode));
    return false;
  });
  return out;
}

}  // namespace sphereminor

#include <catch_amalgamated.hpp>

#include "sphereminor/link_diagram.hpp"
#include "support.hpp"

using namespace sphereminor;
using testing_support::diagram_corpus;

namespace {

std::optional<SphereMap> try_delete(const SphereMap& m, Dart e) {
  try {
    return delete_edge(m, e);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<SphereMap> try_contract(const SphereMap& m, Dart e) {
  if (is_loop(m, e)) return std::nullopt;
  return contract_edge(m, e);
}

}  // namespace

TEST_CASE("projection counts") {
  const SphereMap& p1 = one_crossing_unknot().projection();
  CHECK(p1.vertex_count() == 1);
  CHECK(p1.edge_count() == 2);
  CHECK(p1.face_count() == 3);
  const SphereMap& p3 = trefoil_diagram().projection();
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 6);
  CHECK(p3.face_count() == 5);
  for (const auto& d : diagram_corpus(3)) {
    if (d.crossing_count() == 0) continue;
    CHECK(d.projection().face_count() == d.crossing_count() + 2);
    CHECK(d.projection().edge_count() == 2 * d.crossing_count());
  }
}

TEST_CASE("trefoil diagram alternates") {
  LinkDiagram t = trefoil_diagram();
  auto over = t.over_tags();
  // walking a strand through a crossing goes straight across, so the strand
  // leaves on the same level it entered; consecutive crossings must differ
  const SphereMap& p = t.projection();
  for (Dart d = 0; static_cast<std::size_t>(d) < p.dart_count(); ++d) CHECK(over[d] != over[p.alpha(d)]);
}

TEST_CASE("invalid diagrams are rejected") {
  Crossing c{{0, 1, 2, 3}, true};
  try {
    LinkDiagram({c}, {2, 3, 0, 1});
    FAIL("expected InvalidDiagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_diagram);
  }
  CHECK_THROWS_AS(LinkDiagram({c}, {1, 0}), Error);
  CHECK_THROWS_AS(LinkDiagram({Crossing{{0, 0, 2, 3}, true}}, {1, 0, 3, 2}), Error);
}

TEST_CASE("exchange") {
  LinkDiagram t = trefoil_diagram();
  for (int c = 0; c < 3; ++c) {
    LinkDiagram e = exchange(t, c);
    CHECK(exchange(e, c) == t);
    CHECK(e.projection() == t.projection());
    CHECK_FALSE(e == t);
    auto a = tait_graphs(t), b = tait_graphs(e);
    CHECK(same_tait_pair(a, b, Orientation::oriented));
  }
  try {
    exchange(t, 3);
    FAIL("expected UnknownCrossing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_crossing);
  }
}

TEST_CASE("smoothing the 1-crossing diagram") {
  LinkDiagram d = one_crossing_unknot();
  int disconnects = 0, zero = 0;
  for (SmoothKind k : {SmoothKind::black_delete, SmoothKind::white_delete}) {
    try {
      LinkDiagram s = smooth(d, 0, k);
      CHECK(s.crossing_count() == 0);
      ++zero;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::would_disconnect);
      ++disconnects;
    }
  }
  CHECK(disconnects == 1);
  CHECK(zero == 1);
}

TEST_CASE("smoothing a trefoil crossing") {
  LinkDiagram t = trefoil_diagram();
  int connected = 0;
  for (int c = 0; c < 3; ++c) {
    for (SmoothKind k : {SmoothKind::black_delete, SmoothKind::white_delete}) {
      try {
        LinkDiagram s = smooth(t, c, k);
        CHECK(s.crossing_count() == 2);
        CHECK(validate(s.projection()).empty());
        ++connected;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::would_disconnect);
      }
    }
  }
  CHECK(connected > 0);
  CHECK_THROWS_AS(smooth(t, -1, SmoothKind::black_delete), Error);
}

TEST_CASE("Tait graphs of the standard diagrams") {
  auto t = tait_graphs(trefoil_diagram());
  CHECK(same_tait_pair(t.black, t.white, make_cycle(3), make_dipole(3)));
  auto u = tait_graphs(one_crossing_unknot());
  CHECK(same_tait_pair(u.black, u.white, make_path(1), make_cycle(1)));
  auto z = tait_graphs(LinkDiagram{});
  CHECK(z.black.edgeless());
  CHECK(z.white.edgeless());
}

TEST_CASE("Tait graph properties on small diagrams") {
  for (const auto& d : diagram_corpus(3)) {
    auto t = tait_graphs(d);
    CHECK(equivalent(dual(t.black), t.white));
    CHECK(t.black.vertex_count() + t.white.vertex_count() == d.crossing_count() + 2);
    if (d.crossing_count() == 0) continue;
    CHECK(equivalent(medial(t.black), d.projection()));
    CHECK(equivalent(medial(t.white), d.projection()));
  }
}

TEST_CASE("alternating diagram of g has Tait graph g") {
  for (const auto& g : connected_maps(4)) {
    auto t = tait_graphs(alternating_diagram(g));
    CHECK((equivalent(t.black, g) || equivalent(t.white, g)));
  }
}

TEST_CASE("smoothing deletes in one colour and contracts in the other") {
  for (const auto& d : diagram_corpus(3)) {
    auto t = tait_graphs(d);
    for (int c = 0; static_cast<std::size_t>(c) < d.crossing_count(); ++c) {
      const Dart eb = t.black_edge[c], ew = t.white_edge[c];
      for (SmoothKind k : {SmoothKind::black_delete, SmoothKind::white_delete}) {
        const bool bd = k == SmoothKind::black_delete;
        auto a = bd ? try_delete(t.black, eb) : try_contract(t.black, eb);
        auto b = bd ? try_contract(t.white, ew) : try_delete(t.white, ew);
        std::optional<LinkDiagram> s;
        try {
          s = smooth(d, c, k);
        } catch (const Error& e) {
          REQUIRE(e.code() == Errc::would_disconnect);
        }
        REQUIRE(s.has_value() == (a.has_value() && b.has_value()));
        if (!s) continue;
        CHECK(s->crossing_count() + 1 == d.crossing_count());
        auto ts = tait_graphs(*s);
        CHECK(same_tait_pair(ts.black, ts.white, *a, *b, Orientation::oriented));
      }
    }
  }
}

TEST_CASE("diagram equivalence") {
  LinkDiagram t = trefoil_diagram();
  CHECK(equivalent(t, t));
  CHECK_FALSE(equivalent(t, exchange(t, 0)));
  // mirror image of the trefoil: all crossings flipped
  LinkDiagram m = exchange(exchange(exchange(t, 0), 1), 2);
  CHECK_FALSE(equivalent(t, m));
  CHECK(equivalent(LinkDiagram{}, LinkDiagram{}));
  CHECK_FALSE(equivalent(LinkDiagram{}, one_crossing_unknot()));
}

#include <catch_amalgamated.hpp>

#include <sstream>

#include "sphereminor/diagram_io.hpp"
#include "sphereminor/enumerate.hpp"
#include "support.hpp"

using namespace sphereminor;

namespace {

// Runs the parser and returns the error message, or "" on success.
template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("map documents round-trip byte for byte") {
  for (const auto& m : connected_maps(4)) {
    const std::string s = serialize_map(m);
    SphereMap back = parse_map(s);
    CHECK(back == m);
    CHECK(serialize_map(back) == s);
  }
  CHECK(serialize_map(SphereMap{}) == "spheremap v1 darts=0\n");
  CHECK(parse_map("spheremap v1 darts=0\n").edgeless());
}

TEST_CASE("K2 document") {
  const std::string k2 = "spheremap v1 darts=2\nd 0 sigma=0 alpha=1\nd 1 sigma=1 alpha=0\n";
  SphereMap m = parse_map(k2);
  CHECK(equivalent(m, make_path(1)));
  CHECK(serialize_map(m) == k2);
}

TEST_CASE("parse errors carry line numbers") {
  auto msg = error_of([] { parse_map("spheremap v1 darts=2\nd 0 sigma=0 alpha=0\nd 1 sigma=1 alpha=0\n", "f.map"); });
  CHECK(msg.find("f.map:2:") != std::string::npos);
  CHECK(msg.find("alpha not fixed-point-free") != std::string::npos);

  msg = error_of([] { parse_map("spheremap v1 darts=2\nd 0 sigma=1 alpha=1\nd 1 sigma=1 alpha=0\n"); });
  CHECK(msg.find("3:") != std::string::npos);
  CHECK(msg.find("sigma is not a permutation") != std::string::npos);

  msg = error_of([] {
    parse_map("spheremap v1 darts=4\nd 0 sigma=0 alpha=1\nd 1 sigma=1 alpha=2\nd 2 sigma=2 alpha=3\nd 3 sigma=3 alpha=0\n");
  });
  CHECK(msg.find("alpha not an involution") != std::string::npos);

  msg = error_of([] { parse_map("spheremap v2 darts=2\n"); });
  CHECK(msg.find("1:") != std::string::npos);

  msg = error_of([] { parse_map("spheremap v1 darts=2\nd 0 sigma=0 alpha=1\n"); });
  CHECK(msg.find("expected 2 dart lines") != std::string::npos);

  msg = error_of([] { parse_map("spheremap v1 darts=2\nd 0 sigma=x alpha=1\nd 1 sigma=1 alpha=0\n"); });
  CHECK(msg.find("2:") != std::string::npos);

  // disconnected: two K2s
  msg = error_of([] {
    parse_map("spheremap v1 darts=4\nd 0 sigma=0 alpha=1\nd 1 sigma=1 alpha=0\nd 2 sigma=2 alpha=3\nd 3 sigma=3 alpha=2\n");
  });
  CHECK(msg.find("not connected") != std::string::npos);

  msg = error_of([] { parse_map(""); });
  CHECK_FALSE(msg.empty());
  msg = error_of([] { parse_map("spheremap v1 darts=0\nd 0 sigma=0 alpha=1\n"); });
  CHECK(msg.find("trailing") != std::string::npos);
}

TEST_CASE("several documents in one stream") {
  std::stringstream ss;
  auto maps = connected_maps(2);
  for (const auto& m : maps) write_map(ss, m);
  auto back = read_maps(ss);
  REQUIRE(back.size() == maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) CHECK(back[i] == maps[i]);
}

TEST_CASE("good digraph documents round-trip") {
  for (const auto& g : connected_maps(4)) {
    GoodDigraph d = directed_medial(g);
    const std::string s = serialize_digraph(d);
    GoodDigraph back = parse_digraph(s);
    CHECK(back == d);
    CHECK(serialize_digraph(back) == s);
  }
  CHECK(parse_digraph(serialize_digraph(GoodDigraph{})).is_free_curve());
}

TEST_CASE("digraph parse errors") {
  std::string s = serialize_digraph(directed_medial(make_path(1)));
  auto bad = s;
  bad.replace(bad.find("out"), 3, "up!");
  CHECK(error_of([&] { parse_digraph(bad, "x.dg"); }).find("x.dg:") != std::string::npos);
  // all outgoing is not a good digraph
  std::string all_out = s;
  for (std::size_t p; (p = all_out.find(" in\n")) != std::string::npos;) all_out.replace(p, 4, " out\n");
  try {
    parse_digraph(all_out);
    FAIL("expected NotGoodDigraph");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_good_digraph);
  }
}

TEST_CASE("diagram documents round-trip") {
  for (const auto& d : testing_support::diagram_corpus(3)) {
    const std::string s = serialize_diagram(d);
    LinkDiagram back = parse_diagram(s);
    CHECK(back == d);
    CHECK(serialize_diagram(back) == s);
  }
  CHECK(serialize_diagram(LinkDiagram{}) == "linkdiag v1 crossings=0\n");
}

TEST_CASE("1-crossing diagram document") {
  const std::string text = serialize_diagram(one_crossing_unknot());
  CHECK(text.rfind("linkdiag v1 crossings=1\nx 0 darts=", 0) == 0);
  LinkDiagram d = parse_diagram(text);
  CHECK(d.crossing_count() == 1);
}

TEST_CASE("diagram parse errors") {
  CHECK(error_of([] { parse_diagram("linkdiag v1 crossings=1\nx 0 darts=0,1,2,3 over=c\ns 0 1\ns 2 3\n"); })
            .find("2:") != std::string::npos);
  CHECK(error_of([] { parse_diagram("linkdiag v1 crossings=1\nx 0 darts=0,1,2,3 over=a\ns 1 0\ns 2 3\n"); })
            .find("3:") != std::string::npos);
  CHECK(error_of([] { parse_diagram("linkdiag v1 crossings=1\nx 0 darts=0,1,2,9 over=a\ns 0 1\ns 2 3\n"); })
            .find("out of range") != std::string::npos);
  // opposite darts paired: torus-like, rejected at the header
  CHECK(error_of([] { parse_diagram("linkdiag v1 crossings=1\nx 0 darts=0,1,2,3 over=a\ns 0 2\ns 1 3\n"); })
            .find("1:") != std::string::npos);
}

TEST_CASE("sphere model documents") {
  SphereModel m{make_cycle(3), {0, 2, 4}, {2}};
  const std::string s = serialize_model(m);
  CHECK(s == "spheremodel v1\nsub 0 2 4\nc 2\n");
  SphereModel back = parse_model(s, make_cycle(3));
  CHECK(back.sub_edges == m.sub_edges);
  CHECK(back.c_edges == m.c_edges);
}

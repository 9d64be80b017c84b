#include <catch_amalgamated.hpp>

#include <random>

#include "sphereminor/canonical.hpp"
#include "sphereminor/enumerate.hpp"
#include "support.hpp"

using namespace sphereminor;
using namespace testing_support;

TEST_CASE("relabelling C3 keeps its code") {
  std::mt19937 rng(7);
  SphereMap c3 = make_cycle(3);
  for (int i = 0; i < 50; ++i) {
    SphereMap r = random_relabel(c3, rng);
    CHECK(canonical_form(r) == canonical_form(c3));
    CHECK(canonical_form(r, Orientation::oriented) == canonical_form(c3, Orientation::oriented));
    CHECK(equivalent(c3, r));
  }
}

TEST_CASE("nonequivalent maps get different codes") {
  CHECK(canonical_form(make_cycle(3)) != canonical_form(make_path(3)));
  CHECK_FALSE(equivalent(make_cycle(3), make_cycle(4)));
  CHECK_FALSE(equivalent(doubled_edge(), make_path(1)));
}

TEST_CASE("chiral map and its mirror") {
  SphereMap m = chiral_map();
  SphereMap r = mirror(m);
  CHECK(equivalent(m, r, Orientation::reflective));
  CHECK_FALSE(equivalent(m, r, Orientation::oriented));
}

TEST_CASE("no chiral map below 4 edges") {
  for (const auto& m : connected_maps(3))
    CHECK(equivalent(m, mirror(m), Orientation::oriented));
}

TEST_CASE("codes are invariant under 100 relabellings per corpus map") {
  std::mt19937 rng(12345);
  for (const auto& m : connected_maps(4)) {
    const auto ref = canonical_form(m);
    const auto ref_o = canonical_form(m, Orientation::oriented);
    for (int i = 0; i < 100; ++i) {
      SphereMap r = random_relabel(m, rng);
      REQUIRE(canonical_form(r) == ref);
      REQUIRE(canonical_form(r, Orientation::oriented) == ref_o);
    }
  }
}

TEST_CASE("equivalence is an equivalence relation on the corpus") {
  auto corpus = connected_maps(3);
  std::mt19937 rng(3);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(equivalent(corpus[i], corpus[i]));
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      CHECK(equivalent(corpus[i], corpus[j]) == equivalent(corpus[j], corpus[i]));
      CHECK(equivalent(corpus[i], corpus[j]) == (i == j));
    }
    // triples a ~ b ~ c through two relabellings
    SphereMap b = random_relabel(corpus[i], rng), c = random_relabel(b, rng);
    CHECK((equivalent(corpus[i], b) && equivalent(b, c) && equivalent(corpus[i], c)));
  }
}

TEST_CASE("tags separate otherwise equal maps") {
  SphereMap k2 = make_path(1);
  std::vector<int> t0{0, 0}, t1{1, 0};
  CHECK(canonical_form(k2, Orientation::reflective, t0) != canonical_form(k2, Orientation::reflective, t1));
}

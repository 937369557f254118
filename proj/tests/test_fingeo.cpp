#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "projlens/fingeo.hpp"
#include "projlens/projgrp.hpp"
#include "support/oracles.hpp"

using namespace projlens;

TEST_CASE("flag enumeration counts") {
  Geometry pg22 = Geometry::projective(2, 2);
  CHECK(enumerate_flags(pg22, TypeSet::of({1})).size() == 7);  // Fano points
  CHECK(enumerate_flags(pg22, TypeSet::of({2})).size() == 7);
  CHECK(enumerate_chambers(pg22).size() == 21);

  Geometry pg33 = Geometry::projective(3, 3);
  CHECK(enumerate_chambers(pg33).size() == 2080);

  Geometry d42 = Geometry::hyperbolic(4, 2);
  CHECK(enumerate_chambers(d42).size() == 42525);
  CHECK(enumerate_flags(d42, TypeSet::of({1})).size() == 135);
  // the two generator families have equal size
  CHECK(enumerate_flags(d42, TypeSet::of({3})).size() == 135);
  CHECK(enumerate_flags(d42, TypeSet::of({4})).size() == 135);
}

TEST_CASE("chamber counts match the Weyl group Poincare polynomial") {
  using oracles::poincare_at;
  using oracles::weyl_poincare;
  Geometry a33 = Geometry::projective(3, 3);
  CHECK(enumerate_chambers(a33).size() ==
        poincare_at(weyl_poincare(make_diagram(Family::A, 3)), 3));
  Geometry d42 = Geometry::hyperbolic(4, 2);
  CHECK(enumerate_chambers(d42).size() ==
        poincare_at(weyl_poincare(make_diagram(Family::D, 4)), 2));
}

TEST_CASE("size guard") {
  Geometry d53 = Geometry::hyperbolic(5, 3);
  CHECK_THROWS_AS(enumerate_chambers(d53), std::length_error);
  // small flag types of the same geometry stay enumerable:
  // (q^4+1)(q^5-1)/(q-1) singular points
  CHECK(enumerate_flags(d53, TypeSet::of({1})).size() == 9922);
}

TEST_CASE("residue domains") {
  Geometry pg22 = Geometry::projective(2, 2);
  auto pts = enumerate_flags(pg22, TypeSet::of({1}));
  CHECK(residue_domain(pg22, pts.front()).size() == 3);

  Geometry pg33 = Geometry::projective(3, 3);
  auto lines = enumerate_flags(pg33, TypeSet::of({2}));
  CHECK(residue_domain(pg33, lines.front()).size() == 16);

  Geometry d43 = Geometry::hyperbolic(4, 3);
  auto gens = enumerate_flags(d43, TypeSet::of({4}));
  CHECK(residue_domain(d43, gens.front()).size() == 2080);
}

TEST_CASE("panel thickness is q+1") {
  for (Geometry g : {Geometry::projective(2, 2), Geometry::projective(3, 3),
                     Geometry::hyperbolic(4, 2)}) {
    auto chambers = enumerate_chambers(g);
    // a handful of chambers suffices; thickness is uniform
    for (std::size_t i = 0; i < chambers.size(); i += chambers.size() / 7 + 1)
      for (int t = 1; t <= g.rank(); ++t)
        CHECK(panel_chambers(g, chambers[i], t).size() == static_cast<std::size_t>(g.q() + 1));
  }
}

TEST_CASE("opposition criteria") {
  Geometry pg22 = Geometry::projective(2, 2);
  auto pts = enumerate_flags(pg22, TypeSet::of({1}));
  auto lines = enumerate_flags(pg22, TypeSet::of({2}));
  int opp = 0;
  for (const Flag& l : lines)
    if (is_opposite(pg22, pts.front(), l)) ++opp;
  CHECK(opp == 4);  // lines avoiding the point
  CHECK_THROWS_AS(is_opposite(pg22, pts.front(), pts.front()), std::invalid_argument);

  // same-family generators in D_4 are opposite exactly when disjoint
  Geometry d42 = Geometry::hyperbolic(4, 2);
  auto gens = enumerate_flags(d42, TypeSet::of({4}));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const bool disjoint =
          gens[i].part(4).intersect(d42.field(), gens[j].part(4)).dim() == 0;
      CHECK(is_opposite(d42, gens[i], gens[j]) == disjoint);
    }
}

TEST_CASE("gallery oracle basics") {
  Geometry pg22 = Geometry::projective(2, 2);
  ChamberGraph graph = build_chamber_graph(pg22);
  auto chambers = enumerate_chambers(pg22);
  const Chamber& c = chambers.front();
  // distance zero: the chamber itself
  Flag pt;
  pt.set_part(1, c.part(1));
  int dist = -1;
  CHECK(gallery_projection_oracle(pg22, graph, pt, c, &dist) == c);
  CHECK(dist == 0);
  // idempotence
  auto lines = enumerate_flags(pg22, TypeSet::of({2}));
  for (const Flag& l : lines) {
    Chamber p = gallery_projection_oracle(pg22, graph, l, c);
    CHECK(gallery_projection_oracle(pg22, graph, l, p) == p);
  }
}

TEST_CASE("closed form equals the oracle exhaustively on PG(2,2)") {
  Geometry g = Geometry::projective(2, 2);
  ChamberGraph graph = build_chamber_graph(g);
  for (TypeSet jt : {TypeSet::of({1}), TypeSet::of({2})}) {
    const TypeSet jo = g.type_opposition().image_of(jt);
    for (const Flag& f : enumerate_flags(g, jt))
      for (const Flag& fp : enumerate_flags(g, jo)) {
        if (!is_opposite(g, f, fp)) continue;
        for (const Chamber& c : residue_domain(g, f))
          CHECK(perspectivity_apply(g, f, fp, c) ==
                gallery_projection_oracle(g, graph, fp, c));
      }
  }
}

TEST_CASE("perspectivities are mutually inverse and preserve adjacency") {
  Geometry g = Geometry::projective(3, 2);
  auto flags = enumerate_flags(g, TypeSet::of({1, 3}));
  const Flag& f = flags.front();
  const Flag* fp = nullptr;
  for (const Flag& cand : flags)
    if (is_opposite(g, f, cand)) {
      fp = &cand;
      break;
    }
  REQUIRE(fp);
  auto domain = residue_domain(g, f);
  for (const Chamber& c : domain) {
    Chamber img = perspectivity_apply(g, f, *fp, c);
    CHECK(perspectivity_apply(g, *fp, f, img) == c);
  }
  // i-adjacent chambers map to i'-adjacent chambers (some common type)
  for (const Chamber& c : domain) {
    for (const Chamber& d : panel_chambers(g, c, 2)) {
      if (d == c) continue;
      Chamber ci = perspectivity_apply(g, f, *fp, c);
      Chamber di = perspectivity_apply(g, f, *fp, d);
      int diff = 0;
      for (int t : ci.types().to_vector())
        if (!(ci.part(t) == di.part(t))) ++diff;
      CHECK(diff == 1);
    }
  }
}

TEST_CASE("hyperbolic generator perspectivity round trip") {
  Geometry g = Geometry::hyperbolic(4, 2);
  auto gens = enumerate_flags(g, TypeSet::of({4}));
  const Flag& f = gens.front();
  const Flag* fp = nullptr;
  for (const Flag& cand : gens)
    if (is_opposite(g, f, cand)) {
      fp = &cand;
      break;
    }
  REQUIRE(fp);
  for (const Chamber& c : residue_domain(g, f))
    CHECK(perspectivity_apply(g, *fp, f, perspectivity_apply(g, f, *fp, c)) == c);
}

TEST_CASE("chamber graph cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "projlens_cache_test";
  fs::create_directories(dir);
  setenv("PROJLENS_CACHE_DIR", dir.c_str(), 1);
  Geometry g = Geometry::projective(2, 3);
  ChamberGraph fresh = build_chamber_graph(g);
  REQUIRE(fs::exists(dir / "A2_q3.plc"));
  ChamberGraph cached = build_chamber_graph(g);
  unsetenv("PROJLENS_CACHE_DIR");
  REQUIRE(cached.chambers.size() == fresh.chambers.size());
  CHECK(cached.chambers == fresh.chambers);
  CHECK(cached.adj_by_type == fresh.adj_by_type);
  fs::remove_all(dir);
}

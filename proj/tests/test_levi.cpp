#include <doctest.h>

#include "projlens/levi.hpp"

using namespace projlens;
using gf::Fq;
using gf::Mat;

TEST_CASE("parabolic masks") {
  BlockPattern p = parabolic_masks(3, TypeSet::of({1, 3}));
  CHECK(p.d1 == 1);
  CHECK(p.d2 == 2);
  CHECK(p.d3 == 1);

  BlockPattern q = parabolic_masks(2, TypeSet::of({1}));
  CHECK(q.d1 == 1);
  CHECK(q.d2 == 2);
  CHECK(q.d3 == 0);

  BlockPattern r = parabolic_masks(5, TypeSet::of({1, 2, 5}));
  CHECK(r.d1 == 2);
  CHECK(r.d3 == 1);
  CHECK(r.d2 == 3);

  CHECK_THROWS_AS(parabolic_masks(3, TypeSet::of({2})), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_masks(4, TypeSet::of({1, 3})), std::invalid_argument);
}

TEST_CASE("levi factorization is unique and exhaustive over the stabilizer") {
  Fq f(2);
  BlockPattern p = parabolic_masks(2, TypeSet::of({1}));

  auto pf = enumerate_parabolic(f, p);
  auto uf = enumerate_unipotent(f, p);
  // |P| = |U| * |L|
  unsigned long long l_count = 0;
  for (const Mat& m : pf) {
    bool diagonal = true;
    for (int i = 0; i < p.size() && diagonal; ++i)
      for (int j = 0; j < p.size(); ++j)
        if (m.at(i, j) != 0 && !p.in_l(i, j)) {
          diagonal = false;
          break;
        }
    if (diagonal) ++l_count;
  }
  CHECK(pf.size() == uf.size() * l_count);

  for (const Mat& m : pf) {
    auto [u, l] = levi_factorization(f, m, p);
    CHECK(mat_mul(f, u, l) == m);
    // u has the unipotent mask, l the block-diagonal mask
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        if (i == j) CHECK(u.at(i, j) == 1);
        if (i != j && u.at(i, j) != 0) CHECK(p.in_u(i, j));
        if (l.at(i, j) != 0) CHECK(p.in_l(i, j));
      }
  }

  // identity factors trivially; an L-mask matrix keeps itself
  auto [ui, li] = levi_factorization(f, Mat::identity(3), p);
  CHECK(ui == Mat::identity(3));
  CHECK(li == Mat::identity(3));

  Mat diag = Mat::identity(3);
  diag.at(1, 2) = 1;  // inside the middle block
  auto [ud, ld] = levi_factorization(f, diag, p);
  CHECK(ud == Mat::identity(3));
  CHECK(ld == diag);

  Mat bad = Mat::identity(3);
  bad.at(1, 0) = 1;  // below the stabilizer mask
  CHECK_THROWS_AS(levi_factorization(f, bad, p), std::invalid_argument);
}

TEST_CASE("unipotent radical counts and actions") {
  UnipotentReport r1 = unipotent_transitivity_check(Geometry::projective(2, 2),
                                                    TypeSet::of({1}));
  CHECK(r1.u_order == 4);
  CHECK(r1.opposite_flags == 4);
  CHECK(r1.sharply_transitive);
  CHECK(r1.fixes_residue);

  UnipotentReport r2 = unipotent_transitivity_check(Geometry::projective(2, 3),
                                                    TypeSet::of({1}));
  CHECK(r2.u_order == 9);
  CHECK(r2.sharply_transitive);
  CHECK(r2.fixes_residue);

  UnipotentReport r3 = unipotent_transitivity_check(Geometry::projective(3, 2),
                                                    TypeSet::of({1, 3}));
  CHECK(r3.u_order == 32);
  CHECK(r3.opposite_flags == 32);
  CHECK(r3.sharply_transitive);
  CHECK(r3.fixes_residue);
}

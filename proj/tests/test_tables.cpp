#include <doctest.h>

#include <fstream>
#include <sstream>

#include "projlens/tables.hpp"

using namespace projlens;

TEST_CASE("group name rendering and grey detection") {
  GroupName pgl6{GroupKind::kPGL, 6, 0, false};
  CHECK(pgl6.render() == "PGL_6(K)");
  CHECK(!pgl6.grey());

  GroupName ps{GroupKind::kPSLa, 6, 2, true};
  CHECK(ps.render() == "PSL_6(K,2).2");
  CHECK(ps.render('K', true) == "PGL_6(K,2).2");
  CHECK(ps.grey());

  GroupName pgo{GroupKind::kPGO, 12, 0, true};
  CHECK(pgo.render() == "PGO_12(K)");  // extension is implicit in the name
  CHECK(pgo.grey());

  CHECK(GroupName{GroupKind::kBarPOmega, 12, 0, false}.grey());
  CHECK(!GroupName{GroupKind::kBarPGOCirc, 8, 0, false}.grey());
  CHECK(GroupName{GroupKind::kPGE7, 56, 0, false}.render() == "PGE_7(K)");
}

TEST_CASE("projectivity group lookups") {
  // D_6, cotype {1..5}: residue A_5 with r even
  auto [p1, q1] = projectivity_groups(Family::D, 6, TypeSet::of({6}));
  CHECK(p1 == GroupName{GroupKind::kPSLa, 6, 2, false});
  CHECK(q1.kind == GroupKind::kPSLa);
  CHECK(q1.a == 2);
  CHECK(q1.duality_ext);

  // E_7, cotype {2,4,5,6,7}
  auto [p2, q2] = projectivity_groups(Family::E, 7, TypeSet::of({1, 3}));
  CHECK(p2 == GroupName{GroupKind::kPSLa, 6, 2, false});
  CHECK(q2.duality_ext);

  // E_6, cotype {1,3,4,5,6}
  auto [p3, q3] = projectivity_groups(Family::E, 6, TypeSet::of({2}));
  CHECK(p3 == GroupName{GroupKind::kPSLa, 6, 3, false});
  CHECK(q3 == p3);

  // E_8, cotype {1..7}
  auto [p4, q4] = projectivity_groups(Family::E, 8, TypeSet::of({8}));
  CHECK(p4.kind == GroupKind::kPGE7);
  CHECK(q4 == p4);

  // A ambient: natural action, general equals special
  auto [p5, q5] = projectivity_groups(Family::A, 4, TypeSet::of({1, 2}));
  CHECK(p5 == GroupName{GroupKind::kPGL, 3, 0, false});
  CHECK(q5 == p5);

  CHECK_THROWS_AS(projectivity_groups(Family::D, 5, TypeSet::of({2})), std::domain_error);
  CHECK_THROWS_AS(projectivity_groups(Family::E, 6, TypeSet()), std::invalid_argument);
}

TEST_CASE("tables agree with the classifier on every connected cotype") {
  struct Ambient {
    Family f;
    int lo, hi;
  };
  for (Ambient amb : {Ambient{Family::A, 2, 8}, Ambient{Family::D, 4, 8},
                      Ambient{Family::E, 6, 8}}) {
    for (int r = amb.lo; r <= amb.hi; ++r) {
      Diagram d = make_diagram(amb.f, r);
      const std::uint32_t all = d.nodes().bits();
      for (std::uint32_t m = (all - 1) & all; m; m = (m - 1) & all) {
        TypeSet j(m);
        Diagram res = induced(d, d.nodes().minus(j));
        if (!res.connected()) continue;
        auto [plus, pi] = projectivity_groups(amb.f, r, j);
        Verdict v = n_of(d, j);
        REQUIRE(v.n != NValue::kUnresolved);
        CHECK((pi == plus) == (v.n == NValue::kOne));
        CHECK(pi.duality_ext == (v.n == NValue::kTwo));
      }
    }
  }
}

TEST_CASE("polar-closed marks in the exceptional table match is_polar_closed") {
  for (int m = 6; m <= 8; ++m) {
    Diagram d = make_diagram(Family::E, m);
    for (const TableRow& row : table_rows(Family::E, m)) {
      // rows pinning a unique J: either a literal cotype condition or a
      // unique residue shape of that family/rank
      TypeSet cotype;
      bool unique = false;
      if (!row.cotype_cond.empty() && row.cotype_cond.front() == '{') {
        for (char c : row.cotype_cond)
          if (c >= '1' && c <= '9') cotype = cotype.with(c - '0');
        unique = true;
      } else if (row.cotype_cond == "*") {
        std::vector<TypeSet> matches;
        const std::uint32_t all = d.nodes().bits();
        for (std::uint32_t s = (all - 1) & all; s; s = (s - 1) & all) {
          Diagram res = induced(d, TypeSet(s));
          if (TypeSet(s).size() != row.residue_rank || !res.connected()) continue;
          ShapeInfo sh = classify_shape(res);
          if (sh.family == row.residue_family && sh.rank == row.residue_rank)
            matches.push_back(TypeSet(s));
        }
        if (matches.size() == 1) {
          cotype = matches[0];
          unique = true;
        }
      }
      if (!unique) continue;
      const bool pc = is_polar_closed(d, d.nodes().minus(cotype)).closed;
      if (row.polar_closed_mark) CHECK(pc);
      if (!row.polar_closed_mark) CHECK(!pc);
    }
  }
}

TEST_CASE("applicable rows per ambient") {
  auto refs = [](Family f, int r) {
    std::vector<std::string> out;
    for (const TableRow& row : table_rows(f, r)) out.push_back(row.ref);
    return out;
  };
  CHECK(refs(Family::D, 5) ==
        std::vector<std::string>{"A1", "A3", "A", "A", "A**", "D'"});
  CHECK(refs(Family::D, 4) == std::vector<std::string>{"A1", "A3", "A", "A*"});
  CHECK(refs(Family::E, 6) == std::vector<std::string>{"A1", "A2", "A2", "A3", "A3", "A4",
                                                       "A5", "D4", "D5"});
  CHECK(refs(Family::A, 4).size() == 1);
}

TEST_CASE("golden table files") {
  for (std::string name : {"D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"}) {
    std::ifstream in(std::string(PROJLENS_SOURCE_DIR) + "/tests/golden/tables/" + name +
                     ".txt");
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    Family f = family_from_char(name[0]);
    int rank = name[1] - '0';
    CHECK(render_table(f, rank) == content.str());
  }
}

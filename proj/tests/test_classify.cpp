#include <doctest.h>

#include "projlens/classify.hpp"
#include "projlens/roots.hpp"

using namespace projlens;

namespace {

std::vector<Diagram> sweep_diagrams(int max_rank = 9) {
  std::vector<Diagram> out;
  for (int r = 2; r <= max_rank; ++r) out.push_back(make_diagram(Family::A, r));
  for (int r = 4; r <= max_rank; ++r) out.push_back(make_diagram(Family::D, r));
  for (int r = 6; r <= 8; ++r) out.push_back(make_diagram(Family::E, r));
  return out;
}

std::vector<TypeSet> proper_nonempty_subsets(const Diagram& d) {
  std::vector<TypeSet> out;
  const std::uint32_t all = d.nodes().bits();
  for (std::uint32_t m = (all - 1) & all; m; m = (m - 1) & all) out.push_back(TypeSet(m));
  return out;
}

}  // namespace

TEST_CASE("self_opposite") {
  Diagram e6 = make_diagram(Family::E, 6);
  CHECK(self_opposite(e6, TypeSet::of({2, 4})));
  CHECK(!self_opposite(e6, TypeSet::of({1})));
  Diagram e7 = make_diagram(Family::E, 7);
  for (TypeSet j : proper_nonempty_subsets(e7)) CHECK(self_opposite(e7, j));
}

TEST_CASE("polar_types_of") {
  Diagram e8 = make_diagram(Family::E, 8);
  auto pts = polar_types_of(induced(e8, TypeSet::of({2, 3, 4, 5, 8})));
  CHECK(pts == std::vector<TypeSet>{TypeSet::of({4}), TypeSet::of({8})});

  CHECK(polar_types_of(Diagram()).empty());

  // an A_3-shaped component on labels {5,6,7}
  Diagram a7 = make_diagram(Family::A, 7);
  auto p2 = polar_types_of(induced(a7, TypeSet::of({5, 6, 7})));
  CHECK(p2 == std::vector<TypeSet>{TypeSet::of({5, 7})});
}

TEST_CASE("is_polar_closed") {
  CHECK(is_polar_closed(make_diagram(Family::E, 6), TypeSet::of({2})).closed);
  CHECK(is_polar_closed(make_diagram(Family::E, 7), TypeSet::of({1, 6, 7})).closed);
  CHECK(!is_polar_closed(make_diagram(Family::E, 8), TypeSet::of({1, 6, 7})).closed);
  CHECK(is_polar_closed(make_diagram(Family::A, 7), TypeSet::of({1, 7})).closed);
  CHECK(is_polar_closed(make_diagram(Family::A, 7), TypeSet()).closed);  // vacuous

  auto w = is_polar_closed(make_diagram(Family::E, 6), TypeSet::of({1, 2, 6}));
  REQUIRE(w.closed);
  REQUIRE(w.witness.size() == 2);
  CHECK(w.witness[0] == TypeSet::of({2}));
  CHECK(w.witness[1] == TypeSet::of({1, 6}));
}

TEST_CASE("residual opposition and delta") {
  Diagram e6 = make_diagram(Family::E, 6);
  DiagramMap r1 = residual_opposition(e6, TypeSet::of({1, 2, 6}));
  CHECK(r1(3) == 5);
  CHECK(r1(4) == 4);

  Diagram e7 = make_diagram(Family::E, 7);
  CHECK(residual_opposition(e7, TypeSet::of({1})).is_identity());
  CHECK(residual_opposition(e7, e7.nodes()).domain().empty());

  DiagramMap d16 = delta_map(e6, TypeSet::of({1, 6}));
  CHECK(d16(3) == 5);
  CHECK(d16(5) == 3);
  CHECK(d16(2) == 2);
  CHECK(d16(4) == 4);

  DiagramMap d35 = delta_map(e6, TypeSet::of({3, 5}));
  CHECK(d35(2) == 4);
  CHECK(d35(4) == 2);

  DiagramMap a3d = delta_map(make_diagram(Family::A, 3), TypeSet::of({2}));
  CHECK(a3d(1) == 3);
  CHECK(a3d(3) == 1);

  CHECK_THROWS_AS(delta_map(e6, TypeSet::of({1})), std::invalid_argument);
}

TEST_CASE("n_of examples") {
  Verdict v = n_of(make_diagram(Family::E, 6), TypeSet::of({1, 6}));
  CHECK(v.n == NValue::kTwo);
  CHECK(v.decided_by == DecidedBy::kDuality);

  v = n_of(make_diagram(Family::A, 5), TypeSet::of({1, 5}));
  CHECK(v.n == NValue::kOne);
  CHECK(v.decided_by == DecidedBy::kPolarClosed);

  v = n_of(make_diagram(Family::A, 4), TypeSet::of({2, 3}));
  CHECK(v.n == NValue::kTwo);
  CHECK(v.decided_by == DecidedBy::kDuality);

  v = n_of(make_diagram(Family::E, 8), TypeSet::of({1, 6, 7}));
  CHECK(v.n == NValue::kUnresolved);
  CHECK(v.decided_by == DecidedBy::kUnresolved);

  // a panel that is neither polar closed nor dual
  v = n_of(make_diagram(Family::D, 4), TypeSet::of({1, 3, 4}));
  CHECK(v.n == NValue::kOne);
  CHECK(v.decided_by == DecidedBy::kPanel);

  CHECK_THROWS_AS(n_of(make_diagram(Family::A, 3), TypeSet()), std::invalid_argument);
  CHECK_THROWS_AS(n_of(make_diagram(Family::A, 3), TypeSet::of({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("enumerate_types") {
  Diagram e6 = make_diagram(Family::E, 6);
  CHECK(enumerate_types(e6, TypeFilter::kAllProperNonempty).size() == 62);
  CHECK(enumerate_types(e6, TypeFilter::kSelfOpposite).size() == 14);
  CHECK(enumerate_types(e6, TypeFilter::kSelfOppositeWithBigComponent).size() == 7);
  CHECK(enumerate_types(make_diagram(Family::E, 7), TypeFilter::kPolarClosed).size() == 18);
  CHECK(enumerate_types(make_diagram(Family::E, 8), TypeFilter::kPolarClosed).size() == 19);
  CHECK_THROWS_AS(filter_from_name("bogus"), std::invalid_argument);

  // ascending bitmask order
  auto list = enumerate_types(e6, TypeFilter::kSelfOpposite);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].bits() < list[i].bits());
}

TEST_CASE("smallest opposition kernel") {
  auto k = smallest_opposition_kernel(make_diagram(Family::E, 7));
  CHECK(k.kernel == TypeSet::of({1}));
  CHECK(k.unique);
  k = smallest_opposition_kernel(make_diagram(Family::A, 5));
  CHECK(k.kernel == TypeSet::of({1, 5}));
  CHECK(k.unique);
  k = smallest_opposition_kernel(make_diagram(Family::D, 6));
  CHECK(k.kernel == TypeSet::of({2}));
  CHECK(k.unique);
}

TEST_CASE("polar closed implies n=1 and trivial delta; component criterion") {
  for (const Diagram& d : sweep_diagrams()) {
    for (TypeSet j : proper_nonempty_subsets(d)) {
      auto pc = is_polar_closed(d, j);
      Verdict v = n_of(d, j);
      if (pc.closed) {
        CHECK(v.n == NValue::kOne);
        REQUIRE(v.delta.has_value());
        CHECK(v.delta->is_identity());
        // every component K of the cotype leaves nodes minus K polar closed
        for (TypeSet comp : components(induced(d, d.nodes().minus(j))))
          CHECK(is_polar_closed(d, d.nodes().minus(comp)).closed);
      }
      // self-opposite J with a big component K whose complement is not
      // polar closed forces n = 2
      if (v.self_opposite) {
        bool forced = false;
        for (TypeSet comp : components(induced(d, d.nodes().minus(j))))
          if (comp.size() >= 2 && !is_polar_closed(d, d.nodes().minus(comp)).closed)
            forced = true;
        if (forced) CHECK(v.n == NValue::kTwo);
      }
      // structural invariants of the verdict
      if (!v.self_opposite) CHECK(v.n == NValue::kOne);
      if (v.polar_closed) CHECK(v.n == NValue::kOne);
      if (v.delta && !v.delta->is_identity()) CHECK(v.n == NValue::kTwo);
      if (v.delta) {
        CHECK(v.delta->is_involution());
        Diagram res = induced(d, d.nodes().minus(j));
        for (auto [a, b] : res.edges()) CHECK(res.has_edge((*v.delta)(a), (*v.delta)(b)));
      }
    }
  }
}

TEST_CASE("A_r closed form") {
  for (int r = 2; r <= 9; ++r) {
    Diagram d = make_diagram(Family::A, r);
    for (TypeSet j : proper_nonempty_subsets(d)) {
      Verdict v = n_of(d, j);
      CHECK(v.n != NValue::kUnresolved);
      bool closed_form_one = !self_opposite(d, j);
      if (!closed_form_one) {
        const int k = j.size() / 2;
        closed_form_one = j.size() % 2 == 0 &&
                          j == (TypeSet::interval(1, k) | TypeSet::interval(r - k + 1, r));
      }
      CHECK((v.n == NValue::kOne) == closed_form_one);
    }
  }
}

TEST_CASE("kernel equals polar type for all diagrams up to rank 9") {
  std::vector<Diagram> all = sweep_diagrams();
  all.push_back(make_diagram(Family::A, 1));
  for (const Diagram& d : all) {
    auto k = smallest_opposition_kernel(d);
    CHECK(k.unique);
    CHECK(k.kernel == polar_type(d));
  }
}

TEST_CASE("verdict json") {
  Verdict v = n_of(make_diagram(Family::E, 6), TypeSet::of({1, 6}));
  CHECK(to_json(v) ==
        "{\"n\":2,\"decided_by\":\"DUALITY\",\"self_opposite\":true,"
        "\"polar_closed\":false,\"delta\":{\"2\":2,\"3\":5,\"4\":4,\"5\":3},"
        "\"witness\":null}");
}

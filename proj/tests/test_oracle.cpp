#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/oracle.hpp"
#include "reference.hpp"

using namespace punct;

TEST_CASE("smallest staircase polygons by area") {
  auto p = oracle_staircase(6);
  CHECK(p.at(2, 1) == 1);
  CHECK(p.at_q1()[2] == 1);
  CHECK(p.at(3, 2) == 2);
  CHECK(p.at_q1()[3] == 2);
  CHECK(p.at(4, 3) == 4);
  CHECK(p.at(4, 4) == 1);
  CHECK(p.at_q1()[4] == 5);
}

TEST_CASE("counting recursion agrees with explicit enumeration") {
  const int m = 14;
  BivariateSeries e(m);
  for_each_staircase(m, [&](const StaircaseShape& s) {
    REQUIRE(s.valid());
    e.add(s.half_perimeter(), s.area(), 1);
  });
  e.trim();
  CHECK(oracle_staircase(m) == e);
}

TEST_CASE("staircase totals are Catalan numbers up to m=40") {
  auto p = oracle_staircase(40).at_q1();
  auto cat = ref::catalan(40);
  for (int m = 2; m <= 40; ++m) CHECK(p[m] == cat[m - 1]);
}

TEST_CASE("box counts are symmetric under transposition") {
  auto box = staircase_box_counts(13);
  for (const auto& [wh, n] : box) {
    auto it = box.find({wh.second, wh.first});
    REQUIRE(it != box.end());
    CHECK(it->second == n);
  }
}

TEST_CASE("minimal single puncture: first terms") {
  auto p = oracle_punctured_staircase(10, 1, PunctureSpec::minimal());
  CHECK(p.at_q1()[7] == 0);
  CHECK(p.at_q1()[8] == 1);
  CHECK(p.at(8, 8) == 1);
  CHECK(p.at_q1()[9] == 12);
}

TEST_CASE("minimal single puncture equals the closed-form expansion") {
  const int m = 18;
  auto p = oracle_punctured_staircase(m, 1, PunctureSpec::minimal()).at_q1();
  auto want = ref::st1p(m);
  for (int i = 0; i <= m; ++i) CHECK(Rat(p[i]) == want[i]);
}

TEST_CASE("interval placement agrees with literal cell-set placement") {
  for (int r : {1, 2}) {
    const int m = r == 1 ? 13 : 14;
    for (auto spec : {PunctureSpec::minimal(), PunctureSpec::arbitrary(), PunctureSpec::fixed_total(6)}) {
      CAPTURE(r);
      CAPTURE(static_cast<int>(spec.kind));
      CHECK(oracle_punctured_staircase(m, r, spec) == oracle_punctured_staircase_literal(m, r, spec));
    }
  }
}

TEST_CASE("arbitrary holes partition by total hole size") {
  for (int r : {1, 2}) {
    const int m = r == 1 ? 15 : 13;
    auto all = oracle_punctured_staircase(m, r, PunctureSpec::arbitrary());
    BivariateSeries sum(m);
    for (int s = 2 * r; s <= m; ++s) {
      auto part = oracle_punctured_staircase(m, r, PunctureSpec::fixed_total(s));
      for (int i = 0; i <= m; ++i)
        for (size_t n = 0; n < part.coeffs[i].size(); ++n) sum.add(i, static_cast<int>(n), part.coeffs[i][n]);
    }
    sum.trim();
    CHECK(all == sum);
  }
}

TEST_CASE("smallest twice punctured polygons") {
  // 3x5 and 5x3 rectangles with two cells of the middle line removed.
  auto p = oracle_punctured_staircase(13, 2, PunctureSpec::minimal());
  for (int m = 0; m < 12; ++m) CHECK(p.at_q1()[m] == 0);
  CHECK(p.at_q1()[12] == 2);
  CHECK(p.at(12, 13) == 2);
}

TEST_CASE("oracle rejects unsupported puncture counts") {
  CHECK_THROWS(oracle_punctured_staircase(10, 3, PunctureSpec::minimal()));
  CHECK_THROWS(oracle_punctured_staircase(10, 0, PunctureSpec::minimal()));
}

TEST_CASE("self-avoiding polygons") {
  auto p = oracle_punctured_sap(12, 0);
  CHECK(p[2] == 1);
  CHECK(p[3] == 2);
  CHECK(p[4] == 7);
  auto q = oracle_punctured_sap(16, 1);
  for (int i = 0; i < 8; ++i) CHECK(q[i] == 0);
  CHECK(q[8] == 1);
  CHECK_THROWS(oracle_punctured_sap(40, 0));
  CHECK_THROWS(oracle_punctured_sap(12, 2));
}

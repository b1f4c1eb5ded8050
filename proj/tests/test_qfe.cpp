#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/oracle.hpp"
#include "punct/qfe.hpp"
#include "punct/transfer.hpp"
#include "reference.hpp"

using namespace punct;

TEST_CASE("lowest orders of the area-perimeter function") {
  auto p = solve_qfe(10);
  CHECK(p.coeffs[2] == std::vector<Int>{0, 1});
  CHECK(p.coeffs[3] == std::vector<Int>{0, 0, 2});
  CHECK(p.at(4, 3) == 4);
  CHECK(p.at(4, 4) == 1);
}

TEST_CASE("solution satisfies the q-difference equation and matches the oracle") {
  auto p = solve_qfe(22);
  auto res = qfe_residual(p);
  for (const auto& row : res.coeffs) CHECK(row.empty());
  CHECK(p == oracle_staircase(22));
  CHECK(p.at_q1() == staircase_gf(22));
}

TEST_CASE("single puncture: lowest term and oracle agreement") {
  auto p1 = minimal_puncture_qfe(14);
  for (int m = 0; m < 8; ++m) CHECK(p1.coeffs[m].empty());
  CHECK(p1.coeffs[8].size() == 9);
  CHECK(p1.at(8, 8) == 1);
  CHECK(p1.at_q1()[9] == 12);
  CHECK(p1 == oracle_punctured_staircase(14, 1, PunctureSpec::minimal()));
}

TEST_CASE("single puncture agrees with the transfer matrix up to m=20") {
  auto b = tm_enumerate_bivariate(20, 1);
  CHECK(minimal_puncture_qfe(20) == b[1]);
}

TEST_CASE("moment generating functions") {
  auto p = solve_qfe(12);
  CHECK(area_moment_gf(p, 0) == to_rational(staircase_gf(12)));
  CHECK(area_moment_gf(p, 2)[3] == 8);
  const int n = 24;
  auto p1 = minimal_puncture_qfe(n);
  auto m1 = area_moment_gf(p1, 1);
  auto want = ref::st1p1m(n);
  for (int i = 0; i <= n; ++i) CHECK(m1[i] == want[i]);
}

TEST_CASE("factorial moments relate to power moments by Stirling numbers") {
  // sum_n n^k p_n = sum_j S(k,j) j! (-1)^j g_j
  const int S[5][5] = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 3, 1, 0}, {0, 1, 7, 6, 1}};
  for (const auto& p : {solve_qfe(16), minimal_puncture_qfe(16)}) {
    for (int k = 0; k <= 4; ++k) {
      RationalSeries sum(16);
      for (int j = 0; j <= k; ++j) {
        auto g = factorial_moment_gf(p, j);
        const Rat w = Rat(S[k][j]) * Rat(factorial(j)) * (j % 2 ? -1 : 1);
        sum = series_add(sum, series_scale(g, w));
      }
      CHECK(sum == area_moment_gf(p, k));
    }
  }
}

TEST_CASE("truncated moment expansion agrees with the exact bivariate route") {
  const int n = 20, K = 6;
  auto a = to_moments(solve_qfe(n), K), b = solve_qfe_moments(n, K);
  CHECK(a.binom == b.binom);
  auto c = to_moments(minimal_puncture_qfe(n), K), d = minimal_puncture_qfe_moments(n, K);
  CHECK(c.binom == d.binom);
  auto p1 = minimal_puncture_qfe(n);
  for (int k = 0; k <= K; ++k) CHECK(to_rational(d.power(k)) == area_moment_gf(p1, k));
}

TEST_CASE("long moment series match the transfer matrix") {
  auto t = tm_enumerate(40, 1, 4);
  auto a = solve_qfe_moments(40, 4), b = minimal_puncture_qfe_moments(40, 4);
  for (int k = 0; k <= 4; ++k) {
    CHECK(a.power(k) == t.at(0, k));
    CHECK(b.power(k) == t.at(1, k));
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS(solve_qfe(1));
  CHECK_THROWS(minimal_puncture_qfe(7));
  CHECK_THROWS(solve_qfe_moments(20, 3).power(4));
}

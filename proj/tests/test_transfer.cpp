#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/oracle.hpp"
#include "punct/transfer.hpp"
#include "reference.hpp"

using namespace punct;

TEST_CASE("unpunctured counts are Catalan numbers") {
  auto t = tm_enumerate(40, 0, 0);
  auto cat = ref::catalan(40);
  CHECK(t.at(0, 0)[0] == 0);
  CHECK(t.at(0, 0)[1] == 0);
  for (int m = 2; m <= 40; ++m) CHECK(t.at(0, 0)[m] == cat[m - 1]);
}

TEST_CASE("unpunctured area moments match the oracle") {
  const int m = 16;
  auto t = tm_enumerate(m, 0, 3);
  auto o = oracle_staircase(m);
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i <= m; ++i) {
      Int want = 0;
      for (size_t n = 0; n < o.coeffs[i].size(); ++n) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), n, k);
        want += p * o.coeffs[i][n];
      }
      CHECK(t.at(0, k)[i] == want);
    }
}

TEST_CASE("single minimal puncture: counts and first moment") {
  const int m = 30;
  auto t = tm_enumerate(m, 1, 1);
  auto c0 = ref::st1p(m), c1 = ref::st1p1m(m);
  CHECK(t.at(1, 0)[8] == 1);
  CHECK(t.at(1, 0)[9] == 12);
  for (int i = 0; i <= m; ++i) {
    CHECK(Rat(t.at(1, 0)[i]) == c0[i]);
    CHECK(Rat(t.at(1, 1)[i]) == c1[i]);
  }
}

TEST_CASE("area-resolved counts match the oracle for r <= 2") {
  const int m = 16;
  auto b = tm_enumerate_bivariate(m, 2, TmOptions{true, false});
  CHECK(b[0] == oracle_staircase(m));
  CHECK(b[1] == oracle_punctured_staircase(m, 1, PunctureSpec::minimal()));
  CHECK(b[2] == oracle_punctured_staircase(m, 2, PunctureSpec::minimal()));
}

TEST_CASE("signature validator") {
  Signature s;
  s.rows = {1, 2, 2, 0, 1, 0};
  s.kink = 0;
  s.kink_position = 3;
  CHECK(s.valid());
  s.rows = {1, 2, 0, 2, 1, 0};
  CHECK_FALSE(s.valid());
  s.rows = {2, 2, 1, 0, 1, 0};
  CHECK_FALSE(s.valid());
  s.rows = {1, 2, 0, 0, 0, 0};
  s.kink = 2;
  s.kink_position = 2;  // boundary order 1 2 2 0 0 0 0: no upper walk
  CHECK_FALSE(s.valid());
  s.rows = {1, 2, 0, 1, 0, 0};
  CHECK(s.valid());
}

TEST_CASE("moment shift matches direct powers") {
  MomentState st;
  st.moments = {{Int(3), Int(3 * 5), Int(3 * 25), Int(3 * 125)}};  // three configs of area 5
  st.shift_area(2);
  CHECK(st.moments[0][1] == 21);
  CHECK(st.moments[0][3] == 3 * 343);
  st.shift_area(-1);
  CHECK(st.moments[0][2] == 3 * 36);
}

TEST_CASE("high area moments of punctured polygons match the oracle") {
  const int m = 16, K = 8;
  auto t = tm_enumerate(m, 2, K);
  for (int r = 1; r <= 2; ++r) {
    auto o = oracle_punctured_staircase(m, r, PunctureSpec::minimal());
    for (int k = 0; k <= K; ++k)
      for (int i = 0; i <= m; ++i) {
        Int want = 0;
        for (size_t n = 0; n < o.coeffs[i].size(); ++n) {
          Int p;
          mpz_ui_pow_ui(p.get_mpz_t(), n, k);
          want += p * o.coeffs[i][n];
        }
        CHECK(t.at(r, k)[i] == want);
      }
  }
}

TEST_CASE("big-integer path agrees with the fast path") {
  auto c = tm_enumerate(26, 3, 10);
  auto d = tm_enumerate(26, 3, 10, TmOptions{false, true});
  CHECK(d.stats.used_big_integers);
  for (int r = 0; r <= 3; ++r)
    for (int k = 0; k <= 10; ++k) CHECK(c.at(r, k) == d.at(r, k));

  auto a = tm_enumerate(22, 2, 2);
  auto b = tm_enumerate(22, 2, 2, TmOptions{false, true});
  for (int r = 0; r <= 2; ++r)
    for (int k = 0; k <= 2; ++k) CHECK(a.at(r, k) == b.at(r, k));
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS(tm_enumerate(1, 0, 0));
  CHECK_THROWS(tm_enumerate(20, kTmMaxR + 1, 0));
  CHECK_THROWS(tm_enumerate(20, 0, kTmMaxK + 1));
}

namespace {
Int power_sum(const BivariateSeries& b, int m, int k) {
  Int w = 0;
  for (size_t n = 0; n < b.coeffs[m].size(); ++n) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, k);
    w += p * b.coeffs[m][n];
  }
  return w;
}
}  // namespace

TEST_CASE("staircase holes of fixed total size match the oracle") {
  for (int r : {1, 2}) {
    const int M = r == 1 ? 15 : 13;
    auto t = tm_enumerate_staircase_holes(M, r, M, 2);
    for (int s = 2 * r; s <= M; ++s) {
      auto o = oracle_punctured_staircase(M, r, PunctureSpec::fixed_total(s));
      for (int m = 0; m <= M; ++m)
        for (int k = 0; k <= 2; ++k) CHECK(t.at(r, s, k)[m] == power_sum(o, m, k));
    }
    auto o = oracle_punctured_staircase(M, r, PunctureSpec::arbitrary());
    for (int m = 0; m <= M; ++m) CHECK(t.arbitrary(r, 1)[m] == power_sum(o, m, 1));
  }
}

TEST_CASE("unit-cell holes reproduce the minimal-puncture sweep") {
  auto h = tm_enumerate_staircase_holes(30, 2, 4, 2);
  auto t = tm_enumerate(30, 2, 2);
  for (int k = 0; k <= 2; ++k) {
    CHECK(h.at(0, 0, k) == t.at(0, k));
    CHECK(h.at(1, 2, k) == t.at(1, k));
    CHECK(h.at(2, 4, k) == t.at(2, k));
  }
  CHECK_THROWS(h.arbitrary(1, 0));
}

TEST_CASE("staircase-hole sweep: big-integer path agrees") {
  auto a = tm_enumerate_staircase_holes(24, 2, 8, 3);
  auto b = tm_enumerate_staircase_holes(24, 2, 8, 3, TmOptions{false, true});
  CHECK(a.p == b.p);
}

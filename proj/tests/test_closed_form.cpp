#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punct/closed_form.hpp"
#include "punct/qfe.hpp"
#include "punct/transfer.hpp"
#include "reference.hpp"

using namespace punct;

namespace {
RationalPolynomial poly(const std::vector<long>& c, long den = 1) {
  return RationalPolynomial::from_ints(c) * Rat(1, den);
}
}  // namespace

TEST_CASE("once-punctured closed form from the transfer matrix") {
  auto t = tm_enumerate(30, 2, 0);
  auto cf = reconstruct(t.at(1, 0), Rat(1), 7);
  CHECK(cf.A == poly({1, -8, 20, -16, 2}, 2));
  CHECK(cf.B == poly({-1, 6, -10, 4}, 2));
  CHECK(cf.checked_terms == 31);
  CHECK(cf.expand(30) == ref::st1p(30));

  auto amp = closed_form_amplitudes(cf);
  CHECK(amp.A_at_xc == Rat(1, 256));
  CHECK(*amp.leading.exact == PiRat(Rat(1, 256)));
  CHECK(*amp.correction.exact == PiRat(Rat(-1, 32), -1));  // -(1/8) / (4 sqrt(pi))

  auto cf2 = reconstruct(t.at(2, 0), Rat(5, 2), 9);
  CHECK(cf2.A * Rat(2) == poly({0, 0, 1, -26, 228, -906, 1709, -1378, 322}));
  CHECK(cf2.B * Rat(2) == poly({0, 0, -1, 24, -182, 586, -815, 404, -32}));
}

TEST_CASE("first area moment closed form") {
  auto ms = minimal_puncture_qfe_moments(40, 1);
  auto cf = reconstruct(ms.power(1), Rat(5, 2), 9);
  CHECK(cf.A == poly({1, -14, 72, -162, 145, -34, 2}));
  CHECK(cf.B == poly({-1, 12, -50, 82, -43, 4}));
}

TEST_CASE("inputs without a closed form are rejected") {
  auto p = staircase_gf(45);
  auto sq = series_mul(p, p, 45);
  CHECK_NOTHROW(reconstruct(sq, Rat(0), 10));
  sq[40] += 1;
  CHECK_THROWS_WITH(reconstruct(sq, Rat(0), 10), "no closed form at this degree bound");
  CHECK_THROWS_AS(reconstruct(staircase_gf(10), Rat(0), 10), std::invalid_argument);
}

TEST_CASE("Gamma pole in the correction amplitude") {
  SqrtClosedForm cf{RationalPolynomial(), poly({1}), Rat(1, 2), 0, 0};
  auto amp = closed_form_amplitudes(cf);
  CHECK(amp.leading.exact->is_zero());
  CHECK_FALSE(amp.correction.defined);
  CHECK(amp.correction.to_string() == "amplitude via Gamma undefined");
}

TEST_CASE("one-puncture correction amplitudes are -1/8 of the unpunctured ones") {
  const int K = 6;
  auto at = amplitude_chain(ModelConstants::staircase(), K + 1);
  auto m0 = solve_qfe_moments(60, K);
  auto m1 = minimal_puncture_qfe_moments(60, K);
  for (int k = 0; k <= K; ++k) {
    INFO("k=" << k);
    auto c1 = reconstruct(m1.power(k), at.gamma[k + 1], default_degree_bound(1, k));
    auto a1 = closed_form_amplitudes(c1);
    // unpunctured k = 0 has exponent -1/2 < 0: A(1/4) vanishes in any fit, so
    // use the most singular term of the gamma = 0 form
    Amp l0;
    if (k == 0) {
      auto st = leading_singular_term(reconstruct(m0.power(0), Rat(0), 2));
      CHECK(st.exponent == Rat(1, 2));
      l0 = st.amplitude;
    } else {
      l0 = closed_form_amplitudes(reconstruct(m0.power(k), at.gamma[k], default_degree_bound(0, k))).leading;
    }
    CHECK(*l0.exact == *at.A[k].exact);
    CHECK(*a1.leading.exact == *at.A[k + 1].exact * PiRat(Rat(1, 16)));
    CHECK(*a1.correction.exact == *l0.exact * PiRat(Rat(-1, 8)));
  }
}

TEST_CASE("fixed hole size: once punctured") {
  auto tab = fixed_size_amplitude_tables(1, 5, 1, 39);
  CHECK(tab.leading_matches);
  CHECK(tab.b_k_independent);
  REQUIRE(tab.sequence.size() == 6);
  CHECK(tab.sequence == std::vector<Rat>{0, 0, 1, 5, 29, 182});
  CHECK(*tab.entries[2 * 2].amp.leading.exact == PiRat(Rat(1, 256)));
  // seeds d_1 = 0, d_2 = 1
  auto shifts = d_recurrence_shifts({tab.sequence.begin() + 1, tab.sequence.end()}, 1);
  CHECK(shifts == std::vector<int>{-1});
  CHECK_THROWS_AS(fixed_size_amplitude_tables(1, 5, 1, 30), std::invalid_argument);
}

TEST_CASE("fixed hole size: twice punctured") {
  auto tab = fixed_size_amplitude_tables(2, 5, 0, 45);
  CHECK(tab.leading_matches);
  CHECK(tab.sequence[4] == 1);
  CHECK(tab.sequence[5] == 9);
}

TEST_CASE("recurrence shift detection") {
  // natural indexing fails: with d_1 = 0, d_2 = 1 the s = 1 relation forces d_3 = 17/3
  std::vector<Rat> d{0, 1, Rat(17, 3)};
  CHECK(d_recurrence_shifts(d, 1) == std::vector<int>{0});
  CHECK(d_recurrence_shifts({0, 1, 5, 29, 182}, 1) == std::vector<int>{-1});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "punct/diff_approx.hpp"
#include "punct/seq_fit.hpp"
#include "reference.hpp"

using namespace punct;

namespace {
std::vector<Real> reals(const std::vector<Rat>& c) {
  std::vector<Real> r;
  for (const auto& v : c) r.push_back(to_real(v));
  return r;
}

// Order-n coefficient of sum_i (x - x_c)^i Q_i(x) theta^i F, assembled by
// expanding each polynomial product directly.
Real apply_operator(const BiasedDA& da, const std::vector<Real>& f, int n) {
  Real total = 0;
  for (int i = 0; i <= da.K; ++i) {
    std::vector<Real> p = da.Q[i];
    for (int t = 0; t < i; ++t) {  // p *= (x - x_c)
      std::vector<Real> q(p.size() + 1, Real(0));
      for (size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= da.x_c * p[j];
      }
      p = q;
    }
    for (size_t j = 0; j < p.size() && static_cast<int>(j) <= n; ++j)
      total += p[j] * pow(Real(n - static_cast<int>(j)), i) * f[n - j];
  }
  return total;
}

bool has_exponent(const IndicialResult& r, const Real& want, const Real& tol) {
  for (const auto& e : r.exponents)
    if (abs(e.real() - want) <= tol && abs(e.imag()) <= tol) return true;
  return false;
}
}  // namespace

TEST_CASE("first-order approximant of (1-4x)^(-1/2)") {
  auto c = ref::one_minus_4x_pow(Rat(-1, 2), 20);
  auto da = build_biased_da(reals(c), 1, {0, 1}, Real(0.25));
  CHECK(abs(da.Q[1][0] - 1) < Real(1e-40));
  CHECK(abs(da.Q[0][0]) < Real(1e-40));
  CHECK(abs(da.Q[0][1] - Real(0.5)) < Real(1e-40));
  auto ind = indicial_exponents(da);
  REQUIRE(ind.exponents.size() == 1);
  CHECK(abs(ind.exponents[0].real() + Real(0.5)) < Real(1e-40));
  CHECK_FALSE(ind.irregular);

  IntegerSeries central(20);  // binom(2n, n) = [x^n] (1-4x)^{-1/2}
  for (int n = 0; n <= 20; ++n) central[n] = c[n].get_num();
  auto ex = build_biased_da(central, 1, {0, 1}, Rat(1, 4));
  CHECK(ex.exact);
  CHECK(ex.null_dim == 0);
  CHECK(abs(indicial_exponents(ex).exponents[0].real() + Real(0.5)) < Real(1e-40));
}

TEST_CASE("(1-4x)^(-5/2) is recovered across degree vectors") {
  auto f = reals(ref::one_minus_4x_pow(Rat(-5, 2), 80));
  for (int K : {1, 2}) {
    auto grid = degree_grid(K, 2, 5, 1);
    REQUIRE(grid.size() >= 5);
    auto rows = exponent_scan(f, K, grid, Real(0.25));
    for (const auto& r : rows) {
      REQUIRE(r.error.empty());
      CHECK(has_exponent(r.ind, Real(-2.5), Real(1e-8)));
    }
    auto st = stable_exponents(rows, Real(1e-8));
    bool found = false;
    for (const auto& s : st)
      if (abs(s.mean + Real(2.5)) < Real(1e-8)) found = s.rows == static_cast<int>(rows.size());
    CHECK(found);
  }
}

TEST_CASE("once punctured staircase gives -1 and -1/2") {
  auto f = to_reals(ref::st1p(120));
  auto grid = degree_grid(2, 10, 12, 1);
  auto rows = exponent_scan(f, 2, grid, Real(0.25));
  int ok = 0;
  for (const auto& r : rows) {
    REQUIRE(r.error.empty());
    if (has_exponent(r.ind, Real(-1), Real(1e-8)) && has_exponent(r.ind, Real(-0.5), Real(1e-8))) ++ok;
  }
  CHECK(ok == static_cast<int>(rows.size()));
  CHECK(ok >= 5);
}

TEST_CASE("staircase generating function: analytic part and square-root singularity") {
  auto f = to_reals(staircase_gf(100));
  auto rows = exponent_scan(f, 2, degree_grid(2, 4, 6, 1), Real(0.25));
  auto st = stable_exponents(rows, Real(1e-8));
  std::vector<Real> means;
  for (const auto& s : st) means.push_back(s.mean);
  REQUIRE(means.size() == 2);
  CHECK(abs(means[0]) < Real(1e-8));
  CHECK(abs(means[1] - Real(0.5)) < Real(1e-8));
}

TEST_CASE("constant series has exponent 0") {
  std::vector<Real> f(30, Real(0));
  f[0] = 7;
  auto da = build_biased_da(f, 1, {1, 1}, Real(0.25));
  auto ind = indicial_exponents(da);
  CHECK(has_exponent(ind, Real(0), Real(1e-30)));
}

TEST_CASE("operator annihilates the series beyond the matched orders") {
  auto f = reals(ref::one_minus_4x_pow(Rat(-5, 2), 60));
  auto da = build_biased_da(f, 2, {3, 2, 3}, Real(0.25));
  CHECK(da.null_dim > 0);  // the minimal equation has lower degrees
  Real scale = abs(f[40]);
  for (int n = 0; n <= 40; ++n) CHECK(abs(apply_operator(da, f, n)) < scale * Real(1e-25));
  auto st = to_reals(ref::st1p(60));
  auto db = build_biased_da(st, 2, {10, 11, 10}, Real(0.25));
  for (int n = db.first_order + db.matched; n <= 50; ++n) CHECK(abs(apply_operator(db, st, n)) < abs(st[n]) * Real(1e-25));
}

TEST_CASE("leading coefficient vanishes to order K at x_c") {
  auto f = to_reals(staircase_gf(60));
  auto da = build_biased_da(f, 2, {5, 4, 5}, Real(0.25));
  // expand x^K (x - x_c)^K Q_K, the coefficient of F^(K), and take derivatives at x_c
  std::vector<Real> p = da.Q[2];
  for (int t = 0; t < 2; ++t) {
    std::vector<Real> q(p.size() + 1, Real(0));
    for (size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= da.x_c * p[j];
    }
    p = q;
  }
  p.insert(p.begin(), 2, Real(0));
  auto deriv_at = [&](int order) {
    Real s = 0;
    for (size_t j = order; j < p.size(); ++j) {
      Real c = p[j];
      for (int d = 0; d < order; ++d) c *= Real(static_cast<long>(j) - d);
      s += c * pow(da.x_c, static_cast<long>(j) - order);
    }
    return s;
  };
  CHECK(abs(deriv_at(0)) < Real(1e-40));
  CHECK(abs(deriv_at(1)) < Real(1e-40));
  CHECK(abs(deriv_at(2)) > Real(1e-10));
}

TEST_CASE("noise scatters the exponents") {
  auto exact = reals(ref::one_minus_4x_pow(Rat(-5, 2), 60));
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0, 1);
  auto noisy = exact;
  for (auto& v : noisy) v *= 1 + Real(1e-12) * g(rng);
  auto grid = degree_grid(1, 3, 6, 1);
  Real clean_spread = 0, noisy_spread = 0;
  for (const auto& r : exponent_scan(exact, 1, grid, Real(0.25)))
    clean_spread = std::max(clean_spread, Real(abs(r.ind.exponents.front().real() + Real(2.5))));
  for (const auto& r : exponent_scan(noisy, 1, grid, Real(0.25)))
    for (const auto& e : r.ind.exponents)
      noisy_spread = std::max(noisy_spread, Real(abs(e.real() + Real(2.5))));
  CHECK(clean_spread < Real(1e-30));
  CHECK(noisy_spread > Real(1e-14));
}

TEST_CASE("degenerate leading coefficient is flagged") {
  BiasedDA da;
  da.K = 1;
  da.x_c = Real(0.25);
  da.Q = {{Real(1)}, {Real(-1), Real(4)}};  // Q_1 = 4x - 1 vanishes at x_c
  auto ind = indicial_exponents(da);
  CHECK(ind.irregular);
  CHECK(ind.exponents.empty());
}

TEST_CASE("argument checking") {
  std::vector<Real> f(5, Real(1));
  CHECK_THROWS_AS(build_biased_da(f, 1, {3, 3}, Real(0.25)), std::invalid_argument);
  CHECK_THROWS_AS(build_biased_da(f, 1, {1}, Real(0.25)), std::invalid_argument);
  CHECK_THROWS_AS(build_biased_da(f, 0, {1}, Real(0.25)), std::invalid_argument);
  auto grid = degree_grid(2, 1, 3, 1);
  for (const auto& d : grid) CHECK(*std::max_element(d.begin(), d.end()) - *std::min_element(d.begin(), d.end()) <= 1);
  CHECK(grid.size() == 3 + 2 * 6);  // 3 constant, 6 per adjacent pair
}

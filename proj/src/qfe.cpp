#include "punct/qfe.hpp"

#include <stdexcept>

namespace punct {

namespace {

// Coefficient rings for the x-series. QPoly: exact dense polynomials in q.
// EPoly: polynomials in e = q - 1 truncated after e^K.
struct QPoly {
  using T = std::vector<Int>;
  T zero() const { return {}; }
  T monomial(int a) const {  // q^a
    T r(a + 1);
    r[a] = 1;
    return r;
  }
  void add(T& d, const T& s, long c = 1) const {
    if (s.size() > d.size()) d.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) d[i] += c * s[i];
  }
  T mul(const T& a, const T& b) const {
    if (a.empty() || b.empty()) return {};
    T r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  T shift(const T& a, int s) const {  // q^s a
    if (a.empty()) return {};
    T r(a.size() + s);
    for (size_t i = 0; i < a.size(); ++i) r[i + s] = a[i];
    return r;
  }
  T q_deriv(const T& a) const {  // q d/dq
    T r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] *= static_cast<long>(i);
    return r;
  }
};

struct EPoly {
  int K;
  using T = std::vector<Int>;
  T zero() const { return T(K + 1); }
  T monomial(int a) const {  // (1+e)^a
    T r(K + 1);
    for (int j = 0; j <= K && j <= a; ++j) r[j] = binomial(a, j);
    return r;
  }
  void add(T& d, const T& s, long c = 1) const {
    for (int j = 0; j <= K; ++j) d[j] += c * s[j];
  }
  T mul(const T& a, const T& b) const {
    T r(K + 1);
    for (int i = 0; i <= K; ++i)
      if (a[i] != 0)
        for (int j = 0; i + j <= K; ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  T shift(const T& a, int s) const {
    T r(a);
    for (int t = 0; t < s; ++t)
      for (int j = K; j >= 1; --j) r[j] += r[j - 1];
    return r;
  }
  // (1+e) d/de; the top coefficient is lost, callers carry one extra order.
  T q_deriv(const T& a) const {
    T r(K + 1);
    for (int j = 0; j < K; ++j) r[j] = (j + 1) * a[j + 1];
    for (int j = K; j >= 1; --j) r[j] += r[j - 1];
    return r;
  }
};

template <class R>
using XSeries = std::vector<typename R::T>;

template <class R>
XSeries<R> solve(const R& ring, int n) {
  XSeries<R> p(n + 1, ring.zero());
  for (int m = 2; m <= n; ++m) {
    auto c = ring.zero();
    if (m == 2) c = ring.monomial(1);
    ring.add(c, ring.shift(p[m - 1], 1), 2);
    for (int i = 2; i + 2 <= m; ++i) ring.add(c, ring.mul(p[i], ring.shift(p[m - i], m - i)));
    p[m] = c;
  }
  return p;
}

template <class R>
XSeries<R> mul(const R& ring, const XSeries<R>& a, const XSeries<R>& b) {
  const int n = static_cast<int>(a.size()) - 1;
  XSeries<R> r(n + 1, ring.zero());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) ring.add(r[i + j], ring.mul(a[i], b[j]));
  return r;
}

template <class R>
XSeries<R> one_puncture(const R& ring, const XSeries<R>& p) {
  const int n = static_cast<int>(p.size()) - 1;
  // R(x,q) = P(qx,q); D = 1 - 2qx - R.
  XSeries<R> rq(n + 1, ring.zero()), e(n + 1, ring.zero()), br(n + 1, ring.zero());
  for (int m = 0; m <= n; ++m) rq[m] = ring.shift(p[m], m);
  // 1/D = 1/(1 - E) with E = 2qx + R.
  e = rq;
  if (n >= 1) ring.add(e[1], ring.monomial(1), 2);
  XSeries<R> inv(n + 1, ring.zero());
  inv[0] = ring.monomial(0);
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= m; ++i) ring.add(inv[m], ring.mul(e[i], inv[m - i]));
  auto inv2 = mul(ring, inv, inv);
  // Bracket: R - qx R_x-part + q P_q(qx,q), coefficientwise (1 - m) R_m + q^m (q d/dq) P_m.
  for (int m = 0; m <= n; ++m) {
    br[m] = rq[m];
    ring.add(br[m], rq[m], -m);
    ring.add(br[m], ring.shift(ring.q_deriv(p[m]), m));
  }
  auto prod = mul(ring, inv2, br);
  XSeries<R> out(n + 1, ring.zero());
  for (int m = 4; m <= n; ++m) out[m] = prod[m - 4];
  return out;
}

BivariateSeries to_bivariate(const XSeries<QPoly>& p) {
  BivariateSeries b(static_cast<int>(p.size()) - 1);
  for (size_t m = 0; m < p.size(); ++m) b.coeffs[m] = p[m];
  b.trim();
  return b;
}

XSeries<QPoly> from_bivariate(const BivariateSeries& b) { return b.coeffs; }

MomentSeries to_moment_series(const XSeries<EPoly>& p, int K) {
  MomentSeries ms;
  ms.K = K;
  for (const auto& c : p) ms.binom.emplace_back(c.begin(), c.begin() + K + 1);
  return ms;
}

void check_trunc(int t, int lo) {
  if (t < lo) throw std::invalid_argument("truncation order must be at least " + std::to_string(lo));
}

}  // namespace

BivariateSeries solve_qfe(int trunc_x) {
  check_trunc(trunc_x, 2);
  return to_bivariate(solve(QPoly{}, trunc_x));
}

BivariateSeries minimal_puncture_qfe(int trunc_x) {
  check_trunc(trunc_x, 8);
  QPoly ring;
  return to_bivariate(one_puncture(ring, solve(ring, trunc_x)));
}

BivariateSeries qfe_residual(const BivariateSeries& b) {
  QPoly ring;
  const auto p = from_bivariate(b);
  const int n = b.trunc_x();
  XSeries<QPoly> rq(n + 1);
  for (int m = 0; m <= n; ++m) rq[m] = ring.shift(p[m], m);
  auto pr = mul(ring, p, rq);
  XSeries<QPoly> res(n + 1);
  for (int m = 0; m <= n; ++m) {
    res[m] = p[m];
    if (m == 2) ring.add(res[m], ring.monomial(1), -1);
    if (m >= 1) ring.add(res[m], ring.shift(p[m - 1], 1), -2);
    ring.add(res[m], pr[m], -1);
  }
  return to_bivariate(res);
}

RationalSeries area_moment_gf(const BivariateSeries& p, int k) {
  if (k < 0) throw std::invalid_argument("moment order must be non-negative");
  RationalSeries r(p.trunc_x());
  for (int m = 0; m <= p.trunc_x(); ++m)
    for (size_t n = 0; n < p.coeffs[m].size(); ++n) {
      Int w;
      mpz_ui_pow_ui(w.get_mpz_t(), n, k);
      r[m] += Rat(w * p.coeffs[m][n]);
    }
  return r;
}

RationalSeries factorial_moment_gf(const BivariateSeries& p, int k) {
  if (k < 0) throw std::invalid_argument("moment order must be non-negative");
  RationalSeries r(p.trunc_x());
  const Rat scale = Rat(k % 2 ? -1 : 1) / Rat(factorial(k));
  for (int m = 0; m <= p.trunc_x(); ++m) {
    Int acc = 0;
    for (size_t n = k; n < p.coeffs[m].size(); ++n) {
      Int fall = 1;  // n (n-1) ... (n-k+1)
      for (int i = 0; i < k; ++i) fall *= static_cast<long>(n) - i;
      acc += fall * p.coeffs[m][n];
    }
    r[m] = scale * Rat(acc);
  }
  return r;
}

IntegerSeries MomentSeries::power(int k) const {
  if (k < 0 || k > K) throw std::out_of_range("moment order " + std::to_string(k) + " not carried");
  IntegerSeries s(trunc());
  for (int m = 0; m <= trunc(); ++m) {
    std::vector<Int> F(binom[m].begin(), binom[m].begin() + k + 1);
    s[m] = power_from_binomial_moments(F)[k];
  }
  return s;
}

MomentSeries to_moments(const BivariateSeries& p, int K) {
  MomentSeries ms;
  ms.K = K;
  ms.binom.assign(p.trunc_x() + 1, std::vector<Int>(K + 1));
  for (int m = 0; m <= p.trunc_x(); ++m)
    for (size_t n = 0; n < p.coeffs[m].size(); ++n)
      for (int j = 0; j <= K && j <= static_cast<int>(n); ++j) ms.binom[m][j] += binomial(n, j) * p.coeffs[m][n];
  return ms;
}

MomentSeries solve_qfe_moments(int trunc_x, int K) {
  check_trunc(trunc_x, 2);
  EPoly ring{K};
  return to_moment_series(solve(ring, trunc_x), K);
}

MomentSeries minimal_puncture_qfe_moments(int trunc_x, int K) {
  check_trunc(trunc_x, 8);
  EPoly ring{K + 1};
  return to_moment_series(one_puncture(ring, solve(ring, trunc_x)), K);
}

}  // namespace punct

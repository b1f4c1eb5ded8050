#include "punct/closed_form.hpp"

#include <stdexcept>

#include "punct/transfer.hpp"

namespace punct {

namespace {

const RationalPolynomial& one_minus_4x() {
  static const RationalPolynomial p = RationalPolynomial::from_ints({1, -4});
  return p;
}

// Fraction-free (Bareiss) elimination of an overdetermined system M y = rhs
// with integer entries. Throws if the system is inconsistent or rank deficient.
std::vector<Rat> bareiss_solve(std::vector<std::vector<Int>> M) {
  const size_t rows = M.size(), n = M.empty() ? 0 : M[0].size() - 1;
  if (rows < n) throw std::invalid_argument("underdetermined system");
  Int prev = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < rows && M[p][k] == 0) ++p;
    if (p == rows) throw std::runtime_error("degenerate system: unknown " + std::to_string(k) + " is not determined");
    std::swap(M[k], M[p]);
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j <= n; ++j) {
        M[i][j] = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  for (size_t i = n; i < rows; ++i)
    if (M[i][n] != 0) throw std::runtime_error("no closed form at this degree bound");
  std::vector<Rat> y(n);
  for (size_t k = n; k-- > 0;) {
    Rat acc(M[k][n]);
    for (size_t j = k + 1; j < n; ++j) acc -= Rat(M[k][j]) * y[j];
    y[k] = acc / Rat(M[k][k]);
  }
  return y;
}

Int lcm_den(const std::vector<Rat>& row) {
  Int l = 1;
  for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return l;
}

Amp gamma_ratio(const Rat& value, const Rat& g) {
  if (g.get_den() == 1 && g <= 0) return Amp::undefined();
  if (auto ge = gamma_exact(g)) return Amp(PiRat(value) / *ge);
  return Amp(to_real(value) / real_gamma(to_real(g)));
}

}  // namespace

RationalSeries SqrtClosedForm::expand(int trunc) const {
  auto sq = algebraic_power(one_minus_4x(), Rat(1, 2), trunc);
  auto num = series_add(A.as_series(trunc), series_mul(B.as_series(trunc), sq, trunc));
  return series_mul(num, algebraic_power(one_minus_4x(), -gamma, trunc), trunc);
}

SqrtClosedForm reconstruct(const IntegerSeries& s, const Rat& gamma, int deg_bound) {
  if (deg_bound < 0) throw std::invalid_argument("negative degree bound");
  const int N = s.trunc();
  if (N + 1 < required_terms(deg_bound))
    throw std::invalid_argument("need " + std::to_string(required_terms(deg_bound)) + " coefficients for degree bound " +
                                std::to_string(deg_bound) + ", have " + std::to_string(N + 1));
  const auto T = series_mul(to_rational(s), algebraic_power(one_minus_4x(), gamma, N), N);
  const auto S = algebraic_power(one_minus_4x(), Rat(1, 2), N);
  const int D = deg_bound;
  // Rows n <= D fix a_n once b is known, so B is solved from rows D+1..N
  // (sum_i b_i S_{n-i} = T_n) and A read off afterwards.
  std::vector<std::vector<Int>> M;
  for (int n = D + 1; n <= N; ++n) {
    std::vector<Rat> row;
    for (int i = 0; i <= D; ++i) row.push_back(S[n - i]);
    row.push_back(T[n]);
    const Int l = lcm_den(row);
    std::vector<Int> irow;
    for (const auto& v : row) irow.push_back(Int(v * l));
    M.push_back(std::move(irow));
  }
  const auto b = bareiss_solve(std::move(M));
  std::vector<Rat> a(D + 1);
  for (int n = 0; n <= D; ++n) {
    a[n] = T[n];
    for (int i = 0; i <= n; ++i) a[n] -= b[i] * S[n - i];
  }
  SqrtClosedForm cf{RationalPolynomial(a), RationalPolynomial(b), gamma, D, N + 1};
  if (!(cf.expand(N) == to_rational(s))) throw std::logic_error("reconstruction does not re-expand to its input");
  return cf;
}

ClosedFormAmplitudes closed_form_amplitudes(const SqrtClosedForm& cf) {
  ClosedFormAmplitudes out;
  out.A_at_xc = cf.A.eval(Rat(1, 4));
  out.B_at_xc = cf.B.eval(Rat(1, 4));
  out.leading = out.A_at_xc == 0 ? Amp(PiRat(0)) : gamma_ratio(out.A_at_xc, cf.gamma);
  out.correction = out.B_at_xc == 0 ? Amp(PiRat(0)) : gamma_ratio(out.B_at_xc, cf.gamma - Rat(1, 2));
  return out;
}

SingularTerm leading_singular_term(const SqrtClosedForm& cf) {
  // Re-express a polynomial in x as one in t = 1 - 4x, x = (1 - t)/4.
  auto in_t = [](const RationalPolynomial& p) {
    RationalPolynomial acc, xt(std::vector<Rat>{Rat(1, 4), Rat(-1, 4)}), pw(std::vector<Rat>{Rat(1)});
    for (int i = 0; i <= p.degree(); ++i) {
      acc = acc + pw * p[i];
      pw = pw * xt;
    }
    return acc;
  };
  const auto a = in_t(cf.A), b = in_t(cf.B);
  bool found = false;
  SingularTerm best;
  Rat best_coef;
  auto consider = [&](const Rat& e, const Rat& c) {
    if (c == 0) return;
    if (e.get_den() == 1 && e >= 0) return;  // analytic
    if (!found || e < best.exponent) {
      found = true;
      best.exponent = e;
      best_coef = c;
    }
  };
  for (int j = 0; j <= a.degree(); ++j) consider(Rat(j) - cf.gamma, a[j]);
  for (int j = 0; j <= b.degree(); ++j) consider(Rat(j) + Rat(1, 2) - cf.gamma, b[j]);
  if (!found) throw std::domain_error("closed form is a polynomial; no singular term");
  best.amplitude = gamma_ratio(best_coef, -best.exponent);
  return best;
}

int default_degree_bound(int r, int k, int s) { return std::max(2, 5 * r + 2 * (k + s)); }
int required_terms(int deg_bound) { return 2 * (deg_bound + 1) + 4; }

FixedSizeTable fixed_size_amplitude_tables(int r, int s_max, int k_max, int m_max) {
  if (r != 1 && r != 2) throw std::invalid_argument("fixed-size tables are set up for r = 1, 2");
  const int need = required_terms(default_degree_bound(r, k_max, s_max)) - 1;
  if (m_max < need)
    throw std::invalid_argument("series to half-perimeter " + std::to_string(need) + " needed, have " +
                                std::to_string(m_max));
  const auto ht = tm_enumerate_staircase_holes(m_max, r, s_max, k_max);
  const auto at = amplitude_chain(ModelConstants::staircase(), k_max + r);
  const auto P = staircase_gf(s_max);
  FixedSizeTable tab;
  tab.r = r;
  for (int s = 0; s <= s_max; ++s) {
    std::optional<PiRat> b0;
    for (int k = 0; k <= k_max; ++k) {
      FixedSizeEntry e;
      e.s = s;
      e.k = k;
      e.cf = reconstruct(ht.at(r, s, k), at.gamma[k + r], default_degree_bound(r, k, s));
      e.amp = closed_form_amplitudes(e.cf);
      e.predicted_leading = punctured_amplitudes(at, r, PunctureSpec::fixed_total(s), &P)[k];
      e.b = Amp(-*e.amp.correction.exact / *at.A[k + r - 1].exact);
      if (!(*e.amp.leading.exact == *e.predicted_leading.exact)) tab.leading_matches = false;
      if (b0 && !(*b0 == *e.b.exact)) tab.b_k_independent = false;
      if (!b0) b0 = *e.b.exact;
      tab.entries.push_back(std::move(e));
    }
    if (!b0->is_zero() && b0->e != 0) tab.b_k_independent = false;  // b is expected to be rational
    const Rat scale = r == 1 ? rat_pow(Rat(8), s - 1) : 2 * rat_pow(Rat(8), s - 2);
    tab.sequence.push_back(b0->c * scale);
  }
  return tab;
}

std::vector<int> d_recurrence_shifts(const std::vector<Rat>& d, int first_index, int lo, int hi) {
  std::vector<int> ok;
  for (int shift = lo; shift <= hi; ++shift) {
    bool all = true;
    int tested = 0;
    for (size_t i = 0; i + 2 < d.size(); ++i) {
      const Rat t = Rat(static_cast<long>(i) + first_index + shift);
      const Rat v = 8 * t * t * d[i] + (t + 3) * (7 * t + 10) * d[i + 1] - (t + 3) * (t + 2) * d[i + 2];
      ++tested;
      if (v != 0) all = false;
    }
    if (all && tested > 0) ok.push_back(shift);
  }
  return ok;
}

}  // namespace punct

#include "punct/seq_fit.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>

namespace punct {

using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

std::vector<int> sign_sequence(const RationalPolynomial& poly, const Rat& alpha, int n_max) {
  if (poly[0] != 1) throw std::invalid_argument("sign pattern needs poly(0) = 1");
  const auto s = algebraic_power(poly, alpha, n_max);
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(sgn(s[n]));
  return out;
}

int sign_pattern(const RationalPolynomial& poly, const Rat& alpha, int index) {
  if (index < 0) throw std::invalid_argument("negative index");
  return sign_sequence(poly, alpha, index)[index];
}

AsymptoticForm& AsymptoticForm::add(const std::string& label, const Real& exponent, Modifier mod) {
  if (mod == Modifier::sign_pattern) throw std::invalid_argument("use add_sign for sign-pattern terms");
  terms.push_back(FitTerm{label, exponent, mod, {}, {}, 0});
  return *this;
}

AsymptoticForm& AsymptoticForm::add_sign(const std::string& label, const Real& exponent,
                                         const RationalPolynomial& poly, const Rat& alpha, int shift) {
  terms.push_back(FitTerm{label, exponent, Modifier::sign_pattern, poly, alpha, shift});
  return *this;
}

int AsymptoticForm::index_of(const std::string& label) const {
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].label == label) return static_cast<int>(i);
  return -1;
}

namespace {
std::string lab(char c, int j) { return std::string(1, c) + std::to_string(j); }
Real half(int n) { return Real(n) / 2; }
}  // namespace

AsymptoticForm sqrt_form_ladder(const Real& growth, const Real& lead, int K) {
  AsymptoticForm f{growth, {}};
  for (int j = 0; j <= K; ++j) f.add(lab('a', j), lead - j);
  for (int j = 0; j <= K; ++j) f.add(lab('b', j), lead - half(1) - j);
  return f;
}

AsymptoticForm once_punctured_log_form(int k, int K) {
  AsymptoticForm f{Real(4), {}};
  for (int j = 0; j <= K; ++j) f.add(lab('a', j), half(3 * k) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('b', j), half(3 * k - 1) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('c', j), half(3 * k - 1) - j, Modifier::log_m);
  for (int j = 0; j <= 3 * K; ++j) f.add(lab('d', j), half(-15 + 3 * k - j), Modifier::alternating);
  return f;
}

namespace {
void add_twice_tail(AsymptoticForm& f, int k, int K) {
  for (int j = 0; j <= 3 * K; ++j) f.add(lab('d', j), half(-12 + 3 * k - j), Modifier::alternating);
  const auto poly = RationalPolynomial::from_ints({1, 4, 16});
  for (int j = 0; j <= 3 * K; ++j) f.add_sign(lab('e', j), half(-35 + 3 * k) - j, poly, Rat(33, 2), j);
}
}  // namespace

AsymptoticForm twice_punctured_log_form(int k, int K) {
  AsymptoticForm f{Real(4), {}};
  for (int j = 0; j <= K; ++j) f.add(lab('a', j), half(3 * (1 + k)) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('b', j), half(3 * (1 + k) - 1) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('c', j), half(3 * (1 + k) - 1) - j, Modifier::log_m);
  add_twice_tail(f, k, K);
  return f;
}

AsymptoticForm twice_punctured_exp_form(int K) {
  AsymptoticForm f{Real(4), {}};
  for (int j = 0; j <= K; ++j) f.add(lab('a', j), half(3) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('b', j), half(2) - j);
  for (int j = 0; j <= K; ++j) f.add(lab('c', j), Real(3) / 4 - j);
  add_twice_tail(f, 0, K);
  return f;
}

std::vector<Real> to_reals(const IntegerSeries& s) {
  std::vector<Real> r;
  for (const auto& c : s.coeffs) r.push_back(to_real(c));
  return r;
}

std::vector<Real> to_reals(const RationalSeries& s) {
  std::vector<Real> r;
  for (const auto& c : s.coeffs) r.push_back(to_real(c));
  return r;
}

namespace {

// Sign sequences shared by all windows of one fit.
struct SignCache {
  std::map<std::pair<std::string, std::string>, std::vector<int>> seqs;
  const std::vector<int>& get(const FitTerm& t, int n_max) {
    auto key = std::make_pair(t.poly.to_string(), t.alpha.get_str());
    auto& v = seqs[key];
    if (static_cast<int>(v.size()) <= n_max) v = sign_sequence(t.poly, t.alpha, 2 * n_max + 16);
    return v;
  }
};

FitEstimate solve_window(const std::vector<Real>& coeffs, const AsymptoticForm& form, int M, SignCache& cache) {
  working_digits();
  const int n = static_cast<int>(form.size());
  if (n == 0) throw std::invalid_argument("empty asymptotic form");
  const int lo = M - n + 1;
  if (M >= static_cast<int>(coeffs.size())) throw std::invalid_argument("window end beyond the series");
  if (lo < 1) throw std::invalid_argument("window reaches m < 1; need M >= number of unknowns");
  RMatrix A(n, n);
  RVector y(n);
  for (int i = 0; i < n; ++i) {
    const int m = M - i;
    const Real rm(m), lm = log(rm);
    y(i) = coeffs[m] / pow(form.growth, m);
    for (int c = 0; c < n; ++c) {
      const auto& t = form.terms[c];
      Real v = pow(rm, t.exponent);
      switch (t.mod) {
        case Modifier::none: break;
        case Modifier::log_m: v *= lm; break;
        case Modifier::alternating: if (m % 2) v = -v; break;
        case Modifier::sign_pattern: v *= cache.get(t, M + t.shift)[m + t.shift]; break;
      }
      A(i, c) = v;
    }
  }
  Eigen::FullPivLU<RMatrix> lu(A);
  lu.setThreshold(Real(pow(Real(10), -static_cast<int>(Real::default_precision()) + 10)));
  if (!lu.isInvertible())
    throw std::runtime_error("singular fit system for window m = " + std::to_string(lo) + ".." + std::to_string(M));
  RVector x = lu.solve(y);
  FitEstimate est;
  est.M = M;
  for (int i = 0; i < n; ++i) est.amps.push_back(x(i));
  Real big = 0, small = -1;
  for (int i = 0; i < n; ++i) {
    const Real p = abs(lu.matrixLU()(i, i));
    if (p > big) big = p;
    if (small < 0 || p < small) small = p;
  }
  est.condition = big / small;
  return est;
}

}  // namespace

FitEstimate fit_window(const std::vector<Real>& coeffs, const AsymptoticForm& form, int M) {
  SignCache cache;
  return solve_window(coeffs, form, M, cache);
}

FitResult fit_windows(const std::vector<Real>& coeffs, const AsymptoticForm& form, int M_lo, int M_hi, int K) {
  SignCache cache;
  FitResult r;
  r.K = K;
  for (int M = M_lo; M <= M_hi; ++M) r.windows.push_back(solve_window(coeffs, form, M, cache));
  return r;
}

Real partial_sum_amplitude(const std::vector<Real>& coeffs, const Real& x_c, const std::vector<Real>& exponents,
                           int M, int K) {
  working_digits();
  if (!(x_c > 0)) throw std::invalid_argument("x_c must be positive");
  if (K < 0 || K > static_cast<int>(exponents.size())) throw std::invalid_argument("K exceeds the correction ladder");
  if (M >= static_cast<int>(coeffs.size()) || M - K < 1) throw std::invalid_argument("window outside the series");
  std::vector<Real> S(M + 1);
  Real acc = 0, xp = 1;
  for (int m = 0; m <= M; ++m) {
    acc += coeffs[m] * xp;
    xp *= x_c;
    S[m] = acc;
  }
  const int n = K + 1;
  RMatrix A(n, n);
  RVector y(n);
  for (int i = 0; i < n; ++i) {
    const int m = M - i;
    y(i) = S[m];
    A(i, 0) = 1;
    for (int j = 0; j < K; ++j) A(i, j + 1) = pow(Real(m), -exponents[j]);
  }
  RVector x = A.fullPivLu().solve(y);
  return x(0);
}

std::vector<PartialSumRow> partial_sum_table(const std::vector<Real>& coeffs, const Real& x_c,
                                             const std::vector<Real>& exponents, const std::vector<int>& Ms,
                                             const std::vector<int>& Ks) {
  std::vector<PartialSumRow> rows;
  for (int K : Ks)
    for (int M : Ms) rows.push_back({M, K, partial_sum_amplitude(coeffs, x_c, exponents, M, K)});
  return rows;
}

LogAmplitudeCheck log_amplitude_check(const std::vector<Real>& coeffs, const AmplitudeTable& at, int k, int K,
                                      int windows) {
  if (k > at.k_max()) throw std::invalid_argument("amplitude table too short");
  const auto form = once_punctured_log_form(k, K);
  const int M_hi = static_cast<int>(coeffs.size()) - 1;
  const int n = static_cast<int>(form.size());
  if (M_hi - windows + 1 - n + 1 < 1)
    throw std::invalid_argument("series too short for K = " + std::to_string(K) + ": need more than " +
                                std::to_string(n + windows) + " terms");
  LogAmplitudeCheck out;
  out.fit = fit_windows(coeffs, form, M_hi - windows + 1, M_hi, K);
  const int ic = form.index_of("c0");
  out.c0 = out.fit.windows.back().amps[ic];
  out.ratio = out.c0 / at.A[k].value;
  Real lo = out.ratio, hi = out.ratio;
  for (const auto& w : out.fit.windows) {
    const Real r = w.amps[ic] / at.A[k].value;
    lo = r < lo ? r : lo;
    hi = r > hi ? r : hi;
  }
  out.spread = hi - lo;
  out.predicted = -3 * sqrt(Real(3)) / (8 * real_pi());
  return out;
}

}  // namespace punct

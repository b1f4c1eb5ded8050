#pragma once

#include <map>
#include <string>
#include <vector>

#include "punct/amplitudes.hpp"
#include "punct/real.hpp"
#include "punct/series.hpp"

namespace punct {

// Sign of [x^index] poly^alpha, computed exactly; poly(0) must be 1.
int sign_pattern(const RationalPolynomial& poly, const Rat& alpha, int index);
std::vector<int> sign_sequence(const RationalPolynomial& poly, const Rat& alpha, int n_max);

enum class Modifier { none, log_m, alternating, sign_pattern };

// One unknown amplitude: amp * growth^m * m^exponent * modifier(m).
struct FitTerm {
  std::string label;
  Real exponent;
  Modifier mod = Modifier::none;
  // sign_pattern only: Sign(poly^alpha, m + shift)
  RationalPolynomial poly;
  Rat alpha;
  int shift = 0;
};

struct AsymptoticForm {
  Real growth;
  std::vector<FitTerm> terms;

  AsymptoticForm& add(const std::string& label, const Real& exponent, Modifier mod = Modifier::none);
  AsymptoticForm& add_sign(const std::string& label, const Real& exponent, const RationalPolynomial& poly,
                           const Rat& alpha, int shift);
  int index_of(const std::string& label) const;  // -1 if absent
  size_t size() const { return terms.size(); }
};

// growth^m (sum_{j<=K} a_j m^(lead-j) + b_j m^(lead-1/2-j)), the shape of
// (A + B sqrt(1-4x)) / (1-4x)^gamma with lead = gamma - 1.
AsymptoticForm sqrt_form_ladder(const Real& growth, const Real& lead, int K);
// Once-punctured, arbitrary hole size, k-th moment:
// 4^m (sum_{j<=K} m^(3k/2-j) [a_j + m^(-1/2)(b_j + c_j log m)] + (-1)^m sum_{j<=3K} d_j m^((-15+3k-j)/2)).
AsymptoticForm once_punctured_log_form(int k, int K);
// Twice-punctured, k-th moment, log scenario: a_j, b_j, c_j at m^(3(1+k)/2-j),
// alternating d_j m^((-12+3k+j)/2) and sign-pattern e_j terms from (1+4x+16x^2)^(33/2).
AsymptoticForm twice_punctured_log_form(int k, int K);
// Alternative with c_j m^(3/2-j-3/4) in place of the log terms (k = 0).
AsymptoticForm twice_punctured_exp_form(int K);

struct FitEstimate {
  int M = 0;
  std::vector<Real> amps;  // aligned with form.terms
  Real condition;          // largest / smallest pivot magnitude
};
struct FitResult {
  int K = 0;
  std::vector<FitEstimate> windows;
};

std::vector<Real> to_reals(const IntegerSeries& s);
std::vector<Real> to_reals(const RationalSeries& s);

// Square solve on the orders M, M-1, ..., M-n+1 (n = number of terms).
// Throws std::runtime_error naming the window if the system is singular.
FitEstimate fit_window(const std::vector<Real>& coeffs, const AsymptoticForm& form, int M);
FitResult fit_windows(const std::vector<Real>& coeffs, const AsymptoticForm& form, int M_lo, int M_hi, int K = 0);

// Partial sums S_M = sum_{m<=M} p_m x_c^m fitted to P + sum_{j<K} b_j M^(-e_j)
// on orders M, ..., M-K; returns the estimate of P.
Real partial_sum_amplitude(const std::vector<Real>& coeffs, const Real& x_c, const std::vector<Real>& exponents,
                           int M, int K);
struct PartialSumRow {
  int M = 0, K = 0;
  Real estimate;
};
std::vector<PartialSumRow> partial_sum_table(const std::vector<Real>& coeffs, const Real& x_c,
                                             const std::vector<Real>& exponents, const std::vector<int>& Ms,
                                             const std::vector<int>& Ks);

struct LogAmplitudeCheck {
  FitResult fit;
  Real c0, ratio;        // c0 / A_k at the largest window
  Real spread;           // |ratio| change over the last few windows
  Real predicted;        // -3 sqrt(3) / (8 pi)
};
// Fits the once-punctured arbitrary-size k-th moment series to
// once_punctured_log_form(k, K) and compares c_0 with A_k.
LogAmplitudeCheck log_amplitude_check(const std::vector<Real>& coeffs, const AmplitudeTable& at, int k, int K,
                                      int windows = 5);

}  // namespace punct

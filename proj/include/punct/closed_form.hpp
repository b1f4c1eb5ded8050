#pragma once

#include <string>
#include <vector>

#include "punct/amplitudes.hpp"
#include "punct/series.hpp"

namespace punct {

// (A(x) + B(x) sqrt(1-4x)) / (1-4x)^gamma
struct SqrtClosedForm {
  RationalPolynomial A, B;
  Rat gamma;
  int deg_bound = 0;
  int checked_terms = 0;  // series coefficients reproduced, including the surplus

  RationalSeries expand(int trunc) const;
};

// Solves for A, B of degree <= deg_bound from series * (1-4x)^gamma = A + B sqrt(1-4x).
// Every supplied coefficient must be reproduced; otherwise throws
// std::runtime_error("no closed form at this degree bound").
SqrtClosedForm reconstruct(const IntegerSeries& s, const Rat& gamma, int deg_bound);

struct ClosedFormAmplitudes {
  Rat A_at_xc, B_at_xc;
  Amp leading;     // A(1/4) / Gamma(gamma)
  Amp correction;  // B(1/4) / Gamma(gamma - 1/2)
};
ClosedFormAmplitudes closed_form_amplitudes(const SqrtClosedForm& cf);

// Amplitude of the most singular non-analytic term t^e (t = 1-4x) of the
// form, i.e. the constant L in [x^n] ~ L 4^n n^(-e-1). Agrees with the
// leading amplitude whenever A(1/4) != 0 and gamma > 0.
struct SingularTerm {
  Rat exponent;
  Amp amplitude;
};
SingularTerm leading_singular_term(const SqrtClosedForm& cf);

// Degree bound used when none is given: 5r + 2(k + s) (s = 0 for minimal
// punctures), never below 2.
int default_degree_bound(int r, int k, int s = 0);
// Coefficients needed to reconstruct at degree bound d: 2(d+1) + 4.
int required_terms(int deg_bound);

// Fixed total hole size s: per s, per k the reconstructed form and amplitudes.
struct FixedSizeEntry {
  int s = 0, k = 0;
  SqrtClosedForm cf;
  ClosedFormAmplitudes amp;
  Amp predicted_leading;  // A_{k+r} x_c^s [x^s]P^r / r!
  Amp b;                  // -correction / A_{k+r-1}: the k-independent constant
};
struct FixedSizeTable {
  int r = 0;
  std::vector<FixedSizeEntry> entries;
  // r = 1: d_s = 8^(s-1) b_{1,s}; r = 2: 2 * 8^(s-2) b_{2,s}; indexed by s from 0.
  std::vector<Rat> sequence;
  bool leading_matches = true;   // every entry equals its prediction exactly
  bool b_k_independent = true;   // b does not depend on k
};
// Enumerates staircase polygons with r staircase holes to half-perimeter m_max
// and reconstructs every (s, k) with s <= s_max, k <= k_max. Throws if m_max
// is too short for the default degree bound.
FixedSizeTable fixed_size_amplitude_tables(int r, int s_max, int k_max, int m_max);

// Tests 8 t^2 d_s + (t+3)(7t+10) d_{s+1} - (t+3)(t+2) d_{s+2} = 0 with
// t = s + shift for every s where d_s, d_{s+1}, d_{s+2} are available
// (d indexed from 0). Returns the shifts in [lo, hi] for which all hold.
std::vector<int> d_recurrence_shifts(const std::vector<Rat>& d, int first_index, int lo = -3, int hi = 3);

}  // namespace punct

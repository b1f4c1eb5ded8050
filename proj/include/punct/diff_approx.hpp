#pragma once

#include <complex>
#include <string>
#include <vector>

#include "punct/real.hpp"
#include "punct/series.hpp"

namespace punct {

// sum_{i=0}^{K} (x - x_c)^i Q_i(x) (x d/dx)^i F = 0, so x_c is a root of
// order K of the leading coefficient. degrees = [N_K, ..., N_0]; Q_K(0) is
// fixed to 1 and the remaining sum(N_i + 1) - 1 coefficients are matched
// against sum(N_i + 1) - 1 orders starting at the first nonzero coefficient. Degree vectors larger than the
// minimal equation leave a polynomial multiple free (null_dim > 0); any member
// has the same indicial roots, so the minimum-norm one is returned.
struct BiasedDA {
  int K = 0;
  std::vector<int> degrees;          // [N_K, ..., N_0]
  std::vector<std::vector<Real>> Q;  // Q[i][j] = [x^j] Q_i, i = 0..K
  Real x_c;
  int matched = 0;        // orders matched
  int first_order = 0;    // first matched order
  int null_dim = 0;       // excess solution freedom (degree vector larger than needed)
  Real max_residual;      // relative to the largest coefficient magnitude used
  bool exact = false;     // solved over the rationals
};

// Real mode; coeffs need sum(N_i + 1) - 1 entries past the leading zeros.
BiasedDA build_biased_da(const std::vector<Real>& coeffs, int K, const std::vector<int>& degrees, const Real& x_c);
// Rational mode for integer series and rational x_c.
BiasedDA build_biased_da(const IntegerSeries& coeffs, int K, const std::vector<int>& degrees, const Rat& x_c);

struct IndicialResult {
  std::vector<std::complex<Real>> exponents;  // sorted by real part
  bool irregular = false;                     // Q_K(x_c) vanished; degree dropped
};
// Roots of sum_i Q_i(x_c) x_c^i (lambda)_i: a factor (1 - x/x_c)^lambda of F
// is reported as lambda.
IndicialResult indicial_exponents(const BiasedDA& da);

struct ScanRow {
  std::vector<int> degrees;
  IndicialResult ind;
  Real max_residual;
  int null_dim = 0;
  std::string error;  // non-empty if this degree vector failed
};
std::vector<ScanRow> exponent_scan(const std::vector<Real>& coeffs, int K,
                                   const std::vector<std::vector<int>>& degree_grid, const Real& x_c);
// Every vector with entries in [lo, hi] whose entries differ by at most spread.
std::vector<std::vector<int>> degree_grid(int K, int lo, int hi, int spread = 1);

// Exponents (real parts) present in at least min_fraction of the rows within
// tol of each other; mean and max deviation per cluster.
struct StableExponent {
  Real mean, scatter;
  int rows = 0;
};
std::vector<StableExponent> stable_exponents(const std::vector<ScanRow>& rows, const Real& tol,
                                             double min_fraction = 0.8);

}  // namespace punct

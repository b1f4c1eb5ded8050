#pragma once

#include <vector>

#include "punct/series.hpp"

namespace punct {

// Area-perimeter generating function of staircase polygons, solved order by
// order from P = x^2 q + 2 q x P + P(x,q) P(qx,q).
BivariateSeries solve_qfe(int trunc_x);

// Staircase polygons with one unit-cell puncture:
//   x^4 / (1 - 2qx - P(qx,q))^2 * (P(qx,q) - qx P_x(qx,q) + q P_q(qx,q)).
BivariateSeries minimal_puncture_qfe(int trunc_x);

// P - x^2 q - 2qxP - P(x,q) P(qx,q); zero for an exact solution.
BivariateSeries qfe_residual(const BivariateSeries& p);

// (q d/dq)^k at q = 1.
RationalSeries area_moment_gf(const BivariateSeries& p, int k);
// (-1)^k / k! (d/dq)^k at q = 1.
RationalSeries factorial_moment_gf(const BivariateSeries& p, int k);

// Per order m, the binomial moments sum_n binom(n, j) p_{m,n} for j <= K;
// this is the expansion around q = 1 in e = q - 1, truncated after e^K.
struct MomentSeries {
  int K = 0;
  std::vector<std::vector<Int>> binom;  // [m][j]

  int trunc() const { return static_cast<int>(binom.size()) - 1; }
  // sum_n n^k p_{m,n}
  IntegerSeries power(int k) const;
};

MomentSeries to_moments(const BivariateSeries& p, int K);
// Same equations as above solved directly in the truncated e-expansion, so
// long series and high moments stay cheap.
MomentSeries solve_qfe_moments(int trunc_x, int K);
MomentSeries minimal_puncture_qfe_moments(int trunc_x, int K);

}  // namespace punct

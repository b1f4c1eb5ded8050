#pragma once
// Reference expansions computed independently of the library routines under
// test: generalized binomial coefficients by direct products.

#include <vector>

#include "punct/series.hpp"

namespace ref {

using punct::Int;
using punct::Rat;
using punct::RationalSeries;

// Coefficients of (1-4x)^e: (-4)^n * e(e-1)...(e-n+1)/n!.
inline std::vector<Rat> one_minus_4x_pow(const Rat& e, int trunc) {
  std::vector<Rat> c(trunc + 1);
  Rat acc = 1;
  for (int n = 0; n <= trunc; ++n) {
    c[n] = acc;
    acc = acc * (e - n) / (n + 1) * (-4);
  }
  return c;
}

inline std::vector<Rat> poly_times(const std::vector<long>& p, const std::vector<Rat>& s, int trunc) {
  std::vector<Rat> r(trunc + 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (int n = static_cast<int>(i); n <= trunc; ++n) r[n] += Rat(p[i]) * s[n - i];
  return r;
}

// (a(x) + b(x) sqrt(1-4x)) / (1-4x)^g, all divided by den.
inline RationalSeries sqrt_form(const std::vector<long>& a, const std::vector<long>& b, const Rat& g,
                                long den, int trunc) {
  auto ta = poly_times(a, one_minus_4x_pow(-g, trunc), trunc);
  auto tb = poly_times(b, one_minus_4x_pow(Rat(1, 2) - g, trunc), trunc);
  RationalSeries r(trunc);
  for (int n = 0; n <= trunc; ++n) r[n] = (ta[n] + tb[n]) / den;
  return r;
}

// Once minimally punctured staircase polygons, by half-perimeter.
inline RationalSeries st1p(int trunc) {
  // (1-8x+20x^2-16x^3+2x^4)/(2(1-4x)) - (1-6x+10x^2-4x^3)/(2 sqrt(1-4x))
  return sqrt_form({1, -8, 20, -16, 2}, {-1, 6, -10, 4}, Rat(1), 2, trunc);
}

// First area moment of the same family.
inline RationalSeries st1p1m(int trunc) {
  // N/(1-4x)^{5/2} - M/(1-4x)^2, written over (1-4x)^{5/2} with M sqrt(1-4x).
  return sqrt_form({1, -14, 72, -162, 145, -34, 2}, {-1, 12, -50, 82, -43, 4}, Rat(5, 2), 1, trunc);
}

inline std::vector<Int> catalan(int n_max) {
  std::vector<Int> c(n_max + 1);
  c[0] = 1;
  for (int n = 0; n < n_max; ++n) c[n + 1] = c[n] * 2 * (2 * n + 1) / (n + 2);
  return c;
}

}  // namespace ref

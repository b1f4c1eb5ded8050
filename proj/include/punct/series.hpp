#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace punct {

using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);
Int factorial(long n);
Rat rat_pow(const Rat& base, long e);
// From F_j = sum binom(n,j) w_n (j <= K) to S_k = sum n^k w_n (k <= K).
std::vector<Int> power_from_binomial_moments(const std::vector<Int>& F);

// Truncated series with integer coefficients; coeffs.size() == trunc + 1.
struct IntegerSeries {
  std::vector<Int> coeffs;

  IntegerSeries() = default;
  explicit IntegerSeries(int trunc) : coeffs(trunc + 1) {}
  explicit IntegerSeries(std::vector<Int> c) : coeffs(std::move(c)) {}

  int trunc() const { return static_cast<int>(coeffs.size()) - 1; }
  const Int& operator[](int m) const { return coeffs.at(m); }
  Int& operator[](int m) { return coeffs.at(m); }
  bool operator==(const IntegerSeries&) const = default;
};

// Truncated series with rational coefficients, kept canonical (reduced).
struct RationalSeries {
  std::vector<Rat> coeffs;

  RationalSeries() = default;
  explicit RationalSeries(int trunc) : coeffs(trunc + 1) {}
  explicit RationalSeries(std::vector<Rat> c);

  int trunc() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rat& operator[](int m) const { return coeffs.at(m); }
  Rat& operator[](int m) { return coeffs.at(m); }
  bool operator==(const RationalSeries&) const = default;
};

RationalSeries to_rational(const IntegerSeries& s);
// Throws if any coefficient is not an integer.
IntegerSeries to_integer(const RationalSeries& s);

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rat> c);
  static RationalPolynomial from_ints(const std::vector<long>& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](int i) const;
  Rat eval(const Rat& x) const;
  RationalPolynomial operator*(const Rat& s) const;
  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }
  std::string to_string(const std::string& var = "x") const;
  RationalSeries as_series(int trunc) const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b, int trunc);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int trunc);
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const RationalSeries& a, const Rat& s);
// Multiplicative inverse; requires a[0] != 0.
RationalSeries series_inverse(const RationalSeries& a, int trunc);

// Taylor expansion of g(x)^alpha from f' g = alpha g' f. The constant term
// g(0)^alpha must be rational, otherwise this throws.
RationalSeries algebraic_power(const RationalPolynomial& g, const Rat& alpha, int trunc);

// Half-perimeter generating function of staircase polygons: Catalan(m-1) for m >= 2.
IntegerSeries staircase_gf(int trunc);

// Coefficients of x^m as dense polynomials in q: coeffs[m][n] is [x^m q^n].
struct BivariateSeries {
  std::vector<std::vector<Int>> coeffs;

  BivariateSeries() = default;
  explicit BivariateSeries(int trunc_x) : coeffs(trunc_x + 1) {}

  int trunc_x() const { return static_cast<int>(coeffs.size()) - 1; }
  Int at(int m, int n) const;
  void add(int m, int n, const Int& v);
  // Drops trailing zero q-coefficients of every order.
  void trim();
  IntegerSeries at_q1() const;
  bool operator==(const BivariateSeries& o) const;
};

// Series file format: "# key: value" headers then "<m> <coef>" lines
// (bivariate: "<m> <n> <coef>").
struct SeriesFile {
  std::map<std::string, std::string> headers;
  RationalSeries series;
};
struct BivariateFile {
  std::map<std::string, std::string> headers;
  BivariateSeries series;
};

void write_series(std::ostream& os, const RationalSeries& s, const std::string& name,
                  const std::map<std::string, std::string>& extra = {});
void write_series(std::ostream& os, const IntegerSeries& s, const std::string& name,
                  const std::map<std::string, std::string>& extra = {});
void write_bivariate(std::ostream& os, const BivariateSeries& s, const std::string& name,
                     const std::map<std::string, std::string>& extra = {});
SeriesFile read_series(std::istream& is);
BivariateFile read_bivariate(std::istream& is);
SeriesFile read_series_file(const std::string& path);
BivariateFile read_bivariate_file(const std::string& path);

}  // namespace punct

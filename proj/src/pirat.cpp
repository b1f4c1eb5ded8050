#include "punct/pirat.hpp"

#include <stdexcept>

namespace punct {

PiRat::PiRat(Rat coeff, int half_pi_power) : c(std::move(coeff)), e(half_pi_power) {
  c.canonicalize();
  if (c == 0) e = 0;
}

PiRat PiRat::operator*(const PiRat& o) const { return PiRat(c * o.c, e + o.e); }

PiRat PiRat::operator/(const PiRat& o) const {
  if (o.c == 0) throw std::domain_error("division by zero");
  return PiRat(c / o.c, e - o.e);
}

PiRat PiRat::operator+(const PiRat& o) const {
  if (c == 0) return o;
  if (o.c == 0) return *this;
  if (e != o.e) throw std::domain_error("sum of different powers of pi has no exact form here");
  return PiRat(c + o.c, e);
}

Real PiRat::value() const {
  Real v = to_real(c);
  if (e != 0) v *= pow(real_pi(), Real(e) / 2);
  return v;
}

std::string PiRat::to_string() const {
  if (c == 0 || e == 0) return c.get_str();
  std::string pi_part;
  const int a = e > 0 ? e : -e;
  if (a / 2 > 0) pi_part = a / 2 == 1 ? "pi" : "pi^" + std::to_string(a / 2);
  if (a % 2) pi_part += (pi_part.empty() ? "" : "*") + std::string("sqrt(pi)");
  Int num = c.get_num(), den = c.get_den();
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  if (e > 0) {
    std::string n = num == 1 ? pi_part : num.get_str() + "*" + pi_part;
    return sign + (den == 1 ? n : n + "/" + den.get_str());
  }
  const bool compound = den != 1 || pi_part.find('*') != std::string::npos;
  std::string d = den == 1 ? pi_part : den.get_str() + "*" + pi_part;
  return sign + num.get_str() + "/" + (compound ? "(" + d + ")" : d);
}

std::optional<PiRat> gamma_exact(const Rat& g) {
  const Int& den = g.get_den();
  if (den == 1) {
    const Int& n = g.get_num();
    if (n <= 0) return std::nullopt;
    return PiRat(Rat(factorial(n.get_si() - 1)));
  }
  if (den != 2) return std::nullopt;
  // g = n + 1/2
  const long n = Rat(g - Rat(1, 2)).get_num().get_si();
  if (n >= 0) return PiRat(Rat(factorial(2 * n), Int(1) << (2 * n)) / Rat(factorial(n)), 1);
  const long k = -n;  // Gamma(1/2 - k) = (-4)^k k! / (2k)! sqrt(pi)
  Int p = Int(1) << (2 * k);
  if (k % 2) p = -p;
  return PiRat(Rat(p * factorial(k), factorial(2 * k)), 1);
}

namespace {
// Exact integer b-th root, if any.
std::optional<Int> int_root(const Int& a, unsigned long b) {
  if (a < 0) return std::nullopt;
  Int r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), b) == 0) return std::nullopt;
  return r;
}
}  // namespace

std::optional<Rat> rational_power(const Rat& x, const Rat& p) {
  if (x <= 0) return std::nullopt;
  const unsigned long b = p.get_den().get_ui();
  auto rn = int_root(x.get_num(), b), rd = int_root(x.get_den(), b);
  if (!rn || !rd) return std::nullopt;
  return rat_pow(Rat(*rn, *rd), p.get_num().get_si());
}

}  // namespace punct

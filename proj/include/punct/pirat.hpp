#pragma once

#include <optional>
#include <string>

#include "punct/real.hpp"
#include "punct/series.hpp"

namespace punct {

// Exact value c * pi^(e/2), closed under products and quotients. Enough for
// Gamma at integers and half-integers and everything built from them.
struct PiRat {
  Rat c;
  int e = 0;

  PiRat() = default;
  PiRat(Rat coeff, int half_pi_power = 0);

  static PiRat sqrt_pi() { return PiRat(1, 1); }
  PiRat operator*(const PiRat& o) const;
  PiRat operator/(const PiRat& o) const;
  PiRat operator-() const { return PiRat(-c, e); }
  // Sums need a common pi power (or a zero summand); otherwise throws.
  PiRat operator+(const PiRat& o) const;
  PiRat operator-(const PiRat& o) const { return *this + (-o); }
  bool operator==(const PiRat& o) const { return c == o.c && (c == 0 || e == o.e); }
  bool is_zero() const { return c == 0; }
  Real value() const;
  // e.g. "5/(3072*sqrt(pi))", "1/64", "-3*pi"
  std::string to_string() const;
};

// Gamma(g) for integer or half-integer g; nullopt at a pole or for other g.
std::optional<PiRat> gamma_exact(const Rat& g);
// x^p exactly when it is rational (x > 0), e.g. (1/4)^(-5/2) = 32.
std::optional<Rat> rational_power(const Rat& x, const Rat& p);

}  // namespace punct

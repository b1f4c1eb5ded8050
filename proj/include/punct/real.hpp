#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "punct/series.hpp"

namespace punct {

// Expression templates off so the type drops into Eigen.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Decimal digits of working precision: PUNCT_DIGITS if set (at least 50),
// else 60. Applied to Real on first use.
int working_digits();
// Raises the default precision for the current scope, restoring it after.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Int& v);
Real to_real(const Rat& v);
Real real_pi();
// Gamma function; throws at non-positive integers.
Real real_gamma(const Real& x);
std::string to_string(const Real& v, int digits = 20);

}  // namespace punct

#include "punct/real.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace punct {

int working_digits() {
  static const int digits = [] {
    int d = 60;
    if (const char* env = std::getenv("PUNCT_DIGITS")) {
      d = std::atoi(env);
      if (d < 50) d = 50;
    }
    Real::default_precision(d);
    return d;
  }();
  return digits;
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}
PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Int& v) {
  working_digits();
  Real r;
  mpfr_set_z(r.backend().data(), v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Rat& v) {
  working_digits();
  Real r;
  mpfr_set_q(r.backend().data(), v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real real_pi() {
  working_digits();
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real real_gamma(const Real& x) {
  if (x <= 0 && x == floor(x)) throw std::domain_error("gamma pole at non-positive integer");
  return boost::multiprecision::tgamma(x);
}

std::string to_string(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace punct

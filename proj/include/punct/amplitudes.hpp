#pragma once

#include <optional>
#include <string>
#include <vector>

#include "punct/oracle.hpp"
#include "punct/pirat.hpp"
#include "punct/real.hpp"
#include "punct/series.hpp"

namespace punct {

// A number known numerically and, when the inputs allow it, exactly.
struct Amp {
  Real value;
  std::optional<PiRat> exact;
  bool defined = true;  // false at a Gamma pole

  Amp() = default;
  Amp(const PiRat& p) : value(p.value()), exact(p) {}
  explicit Amp(const Real& v) : value(v) {}
  static Amp undefined();
  std::string to_string(int digits = 20) const;
};
Amp operator*(const Amp& a, const Amp& b);
Amp operator/(const Amp& a, const Amp& b);

struct ModelConstants {
  std::string name;
  Real x_c, f0, f1;
  std::optional<Rat> x_c_exact, f0_exact, f1_exact;
  Rat theta{1, 3}, phi{2, 3};

  static ModelConstants staircase();
  // Rooted square-lattice self-avoiding polygons (numerical constants).
  static ModelConstants rooted_sap();
  // Numerical constants; exact values dropped.
  static ModelConstants numeric(const std::string& name, const Real& x_c, const Real& f0, const Real& f1);
  Rat gamma(int k) const { return (Rat(k) - theta) / phi; }
};

// c_0 = 1, gamma_{k-1} c_{k-1} + (1/4) sum_{l=0}^{k} c_{k-l} c_l = 0, with
// gamma_k = (3k - 1)/2.
std::vector<Rat> ck_sequence(int k_max);

struct AmplitudeTable {
  ModelConstants mc;
  std::vector<Rat> gamma, c;
  std::vector<Amp> f, A;  // area amplitude series coefficients; moment amplitudes
  int k_max() const { return static_cast<int>(A.size()) - 1; }
};

// f_k = c_k f_1^k f_0^(1-k);  A_k = (-1)^k k! f_k x_c^(-gamma_k) / Gamma(gamma_k).
AmplitudeTable amplitude_chain(const ModelConstants& mc, int k_max);

// Leading amplitudes A^(r)_k (k = 0..k_max - r) of the k-th area moment of
// polygons with r punctures:
//   minimal      A_{k+r} x_c^(2r) / r!
//   fixed(s)     A_{k+r} x_c^s [x^s]P^r / r!   (P: hole generating function)
//   arbitrary    A_{k+r} P(x_c)^r / r!         (needs theta > 0)
// P is needed for fixed(s); p_at_xc for arbitrary.
std::vector<Amp> punctured_amplitudes(const AmplitudeTable& at, int r, const PunctureSpec& kind,
                                      const IntegerSeries* P = nullptr, const Amp* p_at_xc = nullptr);

// The factor multiplying A_{k+r} above.
Amp puncture_prefactor(const AmplitudeTable& at, int r, const PunctureSpec& kind, const IntegerSeries* P,
                       const Amp* p_at_xc);

// D_k / D_1^k for k = 0..k_max with D_k = A_{k+r} / (k! A_r).
std::vector<Amp> universal_ratios(const AmplitudeTable& at, int r, int k_max);

struct LimitLawMoments {
  std::vector<Amp> over_A_r;        // A^(r)_k / A_r: not 1 at k = 0
  std::vector<Amp> normalized;      // A^(r)_k / A^(r)_0 = A_{k+r} / A_r
  std::vector<Real> carleman;       // partial sums of normalized_{2k}^(-1/(2k)), k = 1..
};
LimitLawMoments limit_law_moments(const AmplitudeTable& at, int r, const PunctureSpec& kind, int k_max,
                                  const IntegerSeries* P = nullptr, const Amp* p_at_xc = nullptr);

// Terms coef * z^(-exponent).
struct SeriesTerm {
  Rat exponent;
  Amp coef;
};
// Area amplitude series of the punctured class:
//   ((-1)^r / r!) * (puncture factor) * sum_{k>=r} (k)_r f_k z^(-gamma_k), k = 0..k_max.
std::vector<SeriesTerm> area_amplitude_series(const AmplitudeTable& at, int r, const PunctureSpec& kind,
                                              const IntegerSeries* P = nullptr, const Amp* p_at_xc = nullptr);
// Termwise (1/24) z F'(z) - (1/48) F(z).
std::vector<SeriesTerm> one_puncture_transform(const std::vector<SeriesTerm>& F);
// Truncated evaluation of sum coef * z^(-exponent).
Real evaluate(const std::vector<SeriesTerm>& F, const Real& z);

// Airy function and derivative: power series for |t| <= 12 with precision
// raised to absorb cancellation, asymptotic expansion beyond (t > 12 only).
struct AiryValue {
  Real ai, aip;
};
AiryValue airy(const Real& t);
// Zero of Ai of smallest modulus (about -2.338).
Real airy_first_zero();

// F(s) = -4 f_1 d/ds log Ai(lambda s), lambda = (f_0 / (4 f_1))^(2/3); for the
// staircase this is (1/16) d/ds log Ai(2^(8/3) s).
struct ScalingFunctionEval {
  Real s0;  // first zero of Ai(lambda s); F has a pole there
  std::vector<Real> s, F, dF, F1;  // F1 = s F'/24 - F/48
};
ScalingFunctionEval airy_scaling(const ModelConstants& mc, const std::vector<Real>& s_grid);
Real scaling_function(const ModelConstants& mc, const Real& s);
// F' by a five-point difference of scaling_function.
Real scaling_derivative(const ModelConstants& mc, const Real& s);
// F^2 - 4 f_1 F' - f_0^2 s
Real riccati_residual(const ModelConstants& mc, const Real& s);

// Synthetic f_n = n^(gamma-1), g_n = n^(delta-1) (n >= 1, the x_c^-n factors
// cancel); returns [x^n](f g) / (g(x_c) f_n) at each n in ns.
std::vector<double> cauchy_asymptotics_check(double gamma, double delta, const std::vector<long>& ns,
                                             double g_scale = 1.0);

}  // namespace punct

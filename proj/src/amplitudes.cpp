#include "punct/amplitudes.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/zeta.hpp>

namespace punct {

Amp Amp::undefined() {
  Amp a;
  a.defined = false;
  return a;
}

std::string Amp::to_string(int digits) const {
  if (!defined) return "amplitude via Gamma undefined";
  if (exact) return exact->to_string();
  return punct::to_string(value, digits);
}

Amp operator*(const Amp& a, const Amp& b) {
  if (!a.defined || !b.defined) return Amp::undefined();
  if (a.exact && b.exact) return Amp(*a.exact * *b.exact);
  return Amp(a.value * b.value);
}

Amp operator/(const Amp& a, const Amp& b) {
  if (!a.defined || !b.defined) return Amp::undefined();
  if (a.exact && b.exact) return Amp(*a.exact / *b.exact);
  return Amp(a.value / b.value);
}

ModelConstants ModelConstants::staircase() {
  working_digits();
  ModelConstants m;
  m.name = "staircase";
  m.x_c_exact = Rat(1, 4);
  m.f0_exact = Rat(-1);
  m.f1_exact = Rat(-1, 64);
  m.x_c = to_real(*m.x_c_exact);
  m.f0 = to_real(*m.f0_exact);
  m.f1 = to_real(*m.f1_exact);
  return m;
}

ModelConstants ModelConstants::rooted_sap() {
  working_digits();
  const Real xc("0.14368062927");
  return numeric("rooted-sap", xc, Real("-0.929607"), -xc / (8 * real_pi()));
}

ModelConstants ModelConstants::numeric(const std::string& name, const Real& x_c, const Real& f0, const Real& f1) {
  ModelConstants m;
  m.name = name;
  m.x_c = x_c;
  m.f0 = f0;
  m.f1 = f1;
  return m;
}

std::vector<Rat> ck_sequence(int k_max) {
  std::vector<Rat> c(k_max + 1);
  c[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    // the sum contains 2 c_k c_0
    Rat rest = 0;
    for (int l = 1; l < k; ++l) rest += c[k - l] * c[l];
    Rat g(3 * (k - 1) - 1, 2);
    g.canonicalize();
    c[k] = -2 * g * c[k - 1] - rest / 2;
  }
  return c;
}

namespace {

Amp real_pow_amp(const Real& x, const std::optional<Rat>& exact, const Rat& p) {
  if (exact)
    if (auto v = rational_power(*exact, p)) return Amp(PiRat(*v));
  return Amp(pow(x, to_real(p)));
}

bool is_pole(const Rat& g) { return g.get_den() == 1 && g <= 0; }

}  // namespace

AmplitudeTable amplitude_chain(const ModelConstants& mc, int k_max) {
  if (mc.theta != Rat(1, 3) || mc.phi != Rat(2, 3))
    throw std::invalid_argument("the c_k recurrence is set up for theta = 1/3, phi = 2/3");
  working_digits();
  AmplitudeTable at;
  at.mc = mc;
  at.c = ck_sequence(k_max);
  for (int k = 0; k <= k_max; ++k) {
    const Rat g = mc.gamma(k);
    at.gamma.push_back(g);
    Amp f;
    if (mc.f0_exact && mc.f1_exact)
      f = Amp(PiRat(at.c[k] * rat_pow(*mc.f1_exact, k) * rat_pow(*mc.f0_exact, 1 - k)));
    else
      f = Amp(to_real(at.c[k]) * pow(mc.f1, k) * pow(mc.f0, 1 - k));
    at.f.push_back(f);
    if (is_pole(g)) {
      at.A.push_back(Amp::undefined());
      continue;
    }
    Amp gam;
    if (auto ge = gamma_exact(g))
      gam = Amp(*ge);
    else
      gam = Amp(real_gamma(to_real(g)));
    const Amp pre(PiRat(Rat(k % 2 ? -1 : 1) * Rat(factorial(k))));
    at.A.push_back(pre * f * real_pow_amp(mc.x_c, mc.x_c_exact, -g) / gam);
  }
  return at;
}

Amp puncture_prefactor(const AmplitudeTable& at, int r, const PunctureSpec& kind, const IntegerSeries* P,
                       const Amp* p_at_xc) {
  if (r < 0) throw std::invalid_argument("negative puncture count");
  const ModelConstants& mc = at.mc;
  const Amp inv_fact(PiRat(Rat(1, factorial(r))));
  switch (kind.kind) {
    case PunctureKind::minimal:
      return real_pow_amp(mc.x_c, mc.x_c_exact, 2 * r) * inv_fact;
    case PunctureKind::fixed_total: {
      if (!P) throw std::invalid_argument("fixed hole size needs the hole generating function");
      const int s = kind.s;
      if (P->trunc() < s) throw std::invalid_argument("hole generating function too short");
      IntegerSeries pr(s);
      pr[0] = 1;
      for (int i = 0; i < r; ++i) pr = series_mul(pr, *P, s);
      return real_pow_amp(mc.x_c, mc.x_c_exact, s) * Amp(PiRat(Rat(pr[s]))) * inv_fact;
    }
    case PunctureKind::arbitrary: {
      if (mc.theta <= 0) throw std::invalid_argument("arbitrary-size punctures need theta > 0");
      if (!p_at_xc) throw std::invalid_argument("arbitrary-size punctures need P(x_c)");
      Amp p(PiRat(1));
      for (int i = 0; i < r; ++i) p = p * *p_at_xc;
      return p * inv_fact;
    }
  }
  throw std::logic_error("unknown puncture kind");
}

std::vector<Amp> punctured_amplitudes(const AmplitudeTable& at, int r, const PunctureSpec& kind,
                                      const IntegerSeries* P, const Amp* p_at_xc) {
  const Amp pre = puncture_prefactor(at, r, kind, P, p_at_xc);
  std::vector<Amp> out;
  for (int k = 0; k + r <= at.k_max(); ++k) out.push_back(at.A[k + r] * pre);
  return out;
}

std::vector<Amp> universal_ratios(const AmplitudeTable& at, int r, int k_max) {
  if (k_max + r > at.k_max()) throw std::invalid_argument("amplitude table too short");
  auto D = [&](int k) { return at.A[k + r] / at.A[r] / Amp(PiRat(Rat(factorial(k)))); };
  const Amp d1 = D(1);
  std::vector<Amp> out;
  Amp p(PiRat(1));
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(D(k) / p);
    p = p * d1;
  }
  return out;
}

LimitLawMoments limit_law_moments(const AmplitudeTable& at, int r, const PunctureSpec& kind, int k_max,
                                  const IntegerSeries* P, const Amp* p_at_xc) {
  if (k_max + r > at.k_max()) throw std::invalid_argument("amplitude table too short");
  auto pa = punctured_amplitudes(at, r, kind, P, p_at_xc);
  LimitLawMoments lm;
  for (int k = 0; k <= k_max; ++k) {
    lm.over_A_r.push_back(pa[k] / at.A[r]);
    lm.normalized.push_back(pa[k] / pa[0]);
  }
  Real acc = 0;
  for (int k = 1; 2 * k <= k_max; ++k) {
    acc += pow(lm.normalized[2 * k].value, Real(-1) / (2 * k));
    lm.carleman.push_back(acc);
  }
  return lm;
}

std::vector<SeriesTerm> area_amplitude_series(const AmplitudeTable& at, int r, const PunctureSpec& kind,
                                              const IntegerSeries* P, const Amp* p_at_xc) {
  const Amp pre = puncture_prefactor(at, r, kind, P, p_at_xc) * Amp(PiRat(Rat(r % 2 ? -1 : 1)));
  std::vector<SeriesTerm> out;
  for (int k = 0; k <= at.k_max(); ++k) {
    Int fall = 1;
    for (int i = 0; i < r; ++i) fall *= k - i;
    out.push_back({at.gamma[k], Amp(PiRat(Rat(fall))) * at.f[k] * pre});
  }
  return out;
}

std::vector<SeriesTerm> one_puncture_transform(const std::vector<SeriesTerm>& F) {
  std::vector<SeriesTerm> out;
  for (const auto& t : F) out.push_back({t.exponent, t.coef * Amp(PiRat(-t.exponent / 24 - Rat(1, 48)))});
  return out;
}

Real evaluate(const std::vector<SeriesTerm>& F, const Real& z) {
  Real v = 0;
  for (const auto& t : F) v += t.coef.value * pow(z, -to_real(t.exponent));
  return v;
}

namespace {

AiryValue airy_maclaurin(const Real& t) {
  // Ai = c1 f - c2 g with f = sum a_k t^(3k), g = sum b_k t^(3k+1).
  const double at = std::abs(static_cast<double>(t));
  const int extra = t > 0 ? static_cast<int>(2.0 / 3.0 * std::pow(at, 1.5) * 0.8686) + 10 : 10;
  const int digits = working_digits() + extra;
  PrecisionGuard guard(digits);
  const Real tt(t, digits);
  const Real t3 = tt * tt * tt;
  const Real eps = pow(Real(10), -digits);
  Real f = 1, fp = 0, g = tt, gp = 1;
  Real a = 1, ap = tt * tt / 2, b = tt, bp = 1;
  if (t != 0) fp = ap;
  for (int k = 1; k < 100000; ++k) {
    a *= t3 / ((3 * k - 1) * (3 * k));
    b *= t3 / ((3 * k) * (3 * k + 1));
    bp *= t3 / ((3 * k) * (3 * k - 2));
    if (k > 1) ap *= t3 / (3 * (k - 1) * (3 * k - 1));
    f += a;
    g += b;
    gp += bp;
    if (k > 1) fp += ap;
    const Real big = abs(f) + abs(g) + abs(fp) + abs(gp);
    if (abs(a) + abs(b) + abs(ap) + abs(bp) < eps * big && k > 2) break;
  }
  const Real c1 = 1 / (pow(Real(3), Real(2) / 3) * real_gamma(Real(2) / 3));
  const Real c2 = 1 / (pow(Real(3), Real(1) / 3) * real_gamma(Real(1) / 3));
  AiryValue v{c1 * f - c2 * g, c1 * fp - c2 * gp};
  const int wd = working_digits();
  return {Real(v.ai, wd), Real(v.aip, wd)};
}

AiryValue airy_asymptotic(const Real& t) {
  const Real zeta = 2 * pow(t, Real(3) / 2) / 3;
  const Real pre = exp(-zeta) / (2 * sqrt(real_pi()));
  const Real q = pow(t, Real(1) / 4);
  Real u = 1, su = 1, sv = 1, last = 1;
  for (int k = 1; k < 1000; ++k) {
    u *= Real((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / (Real(2 * k - 1) * 216 * k);
    const Real term = u / pow(zeta, k);
    if (term >= last) break;  // smallest term reached
    last = term;
    const Real v = -Real(6 * k + 1) / (6 * k - 1) * u;
    const Real sign = k % 2 ? -1 : 1;
    su += sign * term;
    sv += sign * v / pow(zeta, k);
  }
  return {pre / q * su, -pre * q * sv};
}

}  // namespace

AiryValue airy(const Real& t) {
  working_digits();
  if (abs(t) <= 12) return airy_maclaurin(t);
  if (t > 0) return airy_asymptotic(t);
  throw std::domain_error("airy: arguments below -12 are not supported");
}

Real airy_first_zero() {
  static const Real z = [] {
    Real lo = -2.5, hi = -2.2;  // Ai(lo) < 0 < Ai(hi)
    const Real tol = pow(Real(10), -working_digits() + 5);
    while (hi - lo > tol) {
      const Real mid = (lo + hi) / 2;
      (airy(mid).ai > 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
  }();
  return z;
}

namespace {
Real scaling_lambda(const ModelConstants& mc) {
  const Real ratio = mc.f0 / (4 * mc.f1);
  if (ratio <= 0) throw std::domain_error("scaling function needs f_0 / f_1 > 0");
  return pow(ratio, Real(2) / 3);
}
}  // namespace

Real scaling_function(const ModelConstants& mc, const Real& s) {
  const Real lambda = scaling_lambda(mc);
  const Real s0 = airy_first_zero() / lambda;
  if (s <= s0 + Real("1e-6")) throw std::domain_error("scaling function evaluated at or below its pole");
  const auto v = airy(lambda * s);
  return -4 * mc.f1 * lambda * v.aip / v.ai;
}

Real scaling_derivative(const ModelConstants& mc, const Real& s) {
  const Real h = pow(Real(10), -working_digits() / 5);
  const Real a = scaling_function(mc, s - 2 * h), b = scaling_function(mc, s - h);
  const Real c = scaling_function(mc, s + h), d = scaling_function(mc, s + 2 * h);
  return (a - 8 * b + 8 * c - d) / (12 * h);
}

Real riccati_residual(const ModelConstants& mc, const Real& s) {
  const Real F = scaling_function(mc, s);
  return F * F - 4 * mc.f1 * scaling_derivative(mc, s) - mc.f0 * mc.f0 * s;
}

ScalingFunctionEval airy_scaling(const ModelConstants& mc, const std::vector<Real>& s_grid) {
  ScalingFunctionEval ev;
  ev.s0 = airy_first_zero() / scaling_lambda(mc);
  for (const auto& s : s_grid) {
    const Real F = scaling_function(mc, s), dF = scaling_derivative(mc, s);
    ev.s.push_back(s);
    ev.F.push_back(F);
    ev.dF.push_back(dF);
    ev.F1.push_back(s * dF / 24 - F / 48);
  }
  return ev;
}

std::vector<double> cauchy_asymptotics_check(double gamma, double delta, const std::vector<long>& ns,
                                             double g_scale) {
  if (!(delta < 0) || !(gamma > delta + 1))
    throw std::invalid_argument("cauchy check needs delta < 0 and gamma > delta + 1");
  // g(x_c) = sum_{n>=1} n^(delta-1) = zeta(1 - delta)
  const double g_at_xc = g_scale * boost::math::zeta(1.0 - delta);
  std::vector<double> out;
  for (long n : ns) {
    if (n < 2) throw std::invalid_argument("cauchy check needs n >= 2");
    long double conv = 0;
    for (long i = 1; i < n; ++i)
      conv += std::pow(static_cast<long double>(i), gamma - 1) * g_scale *
              std::pow(static_cast<long double>(n - i), delta - 1);
    out.push_back(static_cast<double>(conv / (g_at_xc * std::pow(static_cast<long double>(n), gamma - 1))));
  }
  return out;
}

}  // namespace punct

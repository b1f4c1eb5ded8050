#include "punct/series.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace punct {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Int> power_from_binomial_moments(const std::vector<Int>& F) {
  // n^k = sum_j S(k,j) j! binom(n,j), S the Stirling numbers of the second kind
  const int K = static_cast<int>(F.size()) - 1;
  std::vector<std::vector<Int>> st(K + 1, std::vector<Int>(K + 1));
  if (K >= 0) st[0][0] = 1;
  for (int k = 1; k <= K; ++k)
    for (int j = 1; j <= k; ++j) st[k][j] = st[k - 1][j - 1] + j * st[k - 1][j];
  std::vector<Int> out(K + 1);
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= k; ++j) out[k] += st[k][j] * factorial(j) * F[j];
  return out;
}

RationalSeries::RationalSeries(std::vector<Rat> c) : coeffs(std::move(c)) {
  for (auto& v : coeffs) v.canonicalize();
}

RationalSeries to_rational(const IntegerSeries& s) {
  RationalSeries r(s.trunc());
  for (int i = 0; i <= s.trunc(); ++i) r[i] = s[i];
  return r;
}

IntegerSeries to_integer(const RationalSeries& s) {
  IntegerSeries r(s.trunc());
  for (int i = 0; i <= s.trunc(); ++i) {
    if (s[i].get_den() != 1)
      throw std::domain_error("coefficient " + std::to_string(i) + " is not an integer: " +
                              s[i].get_str());
    r[i] = s[i].get_num();
  }
  return r;
}

// ---- RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rat> c) : c_(std::move(c)) { normalize(); }

RationalPolynomial RationalPolynomial::from_ints(const std::vector<long>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::normalize() {
  for (auto& v : c_) v.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RationalPolynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rat RationalPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator*(const Rat& s) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + o * Rat(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = abs(c_[i]);
    if (c_[i] < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    bool unit = (a == 1) && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RationalSeries RationalPolynomial::as_series(int trunc) const {
  RationalSeries s(trunc);
  for (int i = 0; i <= trunc && i < static_cast<int>(c_.size()); ++i) s[i] = c_[i];
  return s;
}

// ---- series arithmetic

namespace {

void check_trunc(int trunc, int ta, int tb) {
  if (trunc < 0) throw std::invalid_argument("negative truncation order");
  if (trunc > ta || trunc > tb)
    throw std::out_of_range("requested truncation " + std::to_string(trunc) +
                            " exceeds input truncation " + std::to_string(std::min(ta, tb)));
}

template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, int trunc) {
  std::vector<T> r(trunc + 1);
  // Skip leading zeros; many series here start at x^2 or later.
  int la = 0, lb = 0;
  while (la <= trunc && a[la] == 0) ++la;
  while (lb <= trunc && b[lb] == 0) ++lb;
  for (int n = la + lb; n <= trunc; ++n) {
    T acc = 0;
    for (int k = lb; k <= n - la; ++k) acc += a[n - k] * b[k];
    r[n] = acc;
  }
  return r;
}

}  // namespace

IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b, int trunc) {
  check_trunc(trunc, a.trunc(), b.trunc());
  return IntegerSeries(convolve(a.coeffs, b.coeffs, trunc));
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int trunc) {
  check_trunc(trunc, a.trunc(), b.trunc());
  return RationalSeries(convolve(a.coeffs, b.coeffs, trunc));
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  int t = std::min(a.trunc(), b.trunc());
  RationalSeries r(t);
  for (int i = 0; i <= t; ++i) r[i] = a[i] + b[i];
  return r;
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  int t = std::min(a.trunc(), b.trunc());
  RationalSeries r(t);
  for (int i = 0; i <= t; ++i) r[i] = a[i] - b[i];
  return r;
}

RationalSeries series_scale(const RationalSeries& a, const Rat& s) {
  RationalSeries r = a;
  for (auto& v : r.coeffs) v *= s;
  return r;
}

RationalSeries series_inverse(const RationalSeries& a, int trunc) {
  check_trunc(trunc, a.trunc(), a.trunc());
  if (a[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  RationalSeries r(trunc);
  Rat inv0 = 1 / a[0];
  r[0] = inv0;
  for (int n = 1; n <= trunc; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k)
      if (a[k] != 0) acc += a[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return r;
}

namespace {

// Exact k-th root of a nonnegative integer, or throws.
Int exact_root(const Int& v, unsigned long k) {
  Int r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0)
    throw std::domain_error("constant term has no exact rational power");
  return r;
}

Rat rational_power(const Rat& g0, const Rat& alpha) {
  Int p = alpha.get_num(), q = alpha.get_den();
  if (!q.fits_ulong_p() || !p.fits_slong_p()) throw std::domain_error("exponent too large");
  unsigned long qq = q.get_ui();
  Rat base = g0;
  bool neg = base < 0;
  if (neg && qq % 2 == 0) throw std::domain_error("even root of a negative constant term");
  if (neg) base = -base;
  Rat root(exact_root(base.get_num(), qq), exact_root(base.get_den(), qq));
  if (neg) root = -root;
  return rat_pow(root, p.get_si());
}

}  // namespace

RationalSeries algebraic_power(const RationalPolynomial& g, const Rat& alpha, int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation order");
  if (g[0] == 0) throw std::domain_error("algebraic_power: g(0) = 0 has no Taylor branch");
  RationalSeries f(trunc);
  f[0] = rational_power(g[0], alpha);
  const int d = g.degree();
  const Rat inv_g0 = 1 / g[0];
  // n g0 f_n = sum_{k=1}^{min(n,d)} (alpha k - (n - k)) g_k f_{n-k}
  for (int n = 1; n <= trunc; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= std::min(n, d); ++k) {
      const Rat& gk = g.coeffs()[k];
      if (gk == 0) continue;
      acc += (alpha * k - (n - k)) * gk * f[n - k];
    }
    f[n] = acc * inv_g0 / n;
  }
  return f;
}

IntegerSeries staircase_gf(int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation order");
  IntegerSeries s(trunc);
  for (int m = 2; m <= trunc; ++m) s[m] = binomial(2 * m - 2, m - 1) / m;
  return s;
}

// ---- bivariate

Int BivariateSeries::at(int m, int n) const {
  if (m < 0 || m > trunc_x() || n < 0) return 0;
  const auto& row = coeffs[m];
  return n < static_cast<int>(row.size()) ? row[n] : Int(0);
}

void BivariateSeries::add(int m, int n, const Int& v) {
  auto& row = coeffs.at(m);
  if (n >= static_cast<int>(row.size())) row.resize(n + 1);
  row[n] += v;
}

void BivariateSeries::trim() {
  for (auto& row : coeffs)
    while (!row.empty() && row.back() == 0) row.pop_back();
}

IntegerSeries BivariateSeries::at_q1() const {
  IntegerSeries s(trunc_x());
  for (int m = 0; m <= trunc_x(); ++m)
    for (const auto& v : coeffs[m]) s[m] += v;
  return s;
}

bool BivariateSeries::operator==(const BivariateSeries& o) const {
  if (trunc_x() != o.trunc_x()) return false;
  for (int m = 0; m <= trunc_x(); ++m) {
    size_t len = std::max(coeffs[m].size(), o.coeffs[m].size());
    for (size_t n = 0; n < len; ++n)
      if (at(m, static_cast<int>(n)) != o.at(m, static_cast<int>(n))) return false;
  }
  return true;
}

// ---- file format

namespace {

void write_headers(std::ostream& os, const std::string& name, int trunc, const std::string& var,
                   const std::map<std::string, std::string>& extra) {
  os << "# name: " << name << "\n";
  os << "# truncation: " << trunc << "\n";
  os << "# variable: " << var << "\n";
  for (const auto& [k, v] : extra) os << "# " << k << ": " << v << "\n";
}

std::string trim_ws(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

bool parse_header(const std::string& line, std::map<std::string, std::string>& headers) {
  if (line.empty() || line[0] != '#') return false;
  std::string body = line.substr(1);
  auto colon = body.find(':');
  if (colon != std::string::npos)
    headers[trim_ws(body.substr(0, colon))] = trim_ws(body.substr(colon + 1));
  return true;
}

int header_trunc(const std::map<std::string, std::string>& h, int fallback) {
  auto it = h.find("truncation");
  return it == h.end() ? fallback : std::stoi(it->second);
}

}  // namespace

void write_series(std::ostream& os, const RationalSeries& s, const std::string& name,
                  const std::map<std::string, std::string>& extra) {
  write_headers(os, name, s.trunc(), "x", extra);
  for (int m = 0; m <= s.trunc(); ++m) os << m << " " << s[m].get_str() << "\n";
}

void write_series(std::ostream& os, const IntegerSeries& s, const std::string& name,
                  const std::map<std::string, std::string>& extra) {
  write_series(os, to_rational(s), name, extra);
}

void write_bivariate(std::ostream& os, const BivariateSeries& s, const std::string& name,
                     const std::map<std::string, std::string>& extra) {
  write_headers(os, name, s.trunc_x(), "x q", extra);
  for (int m = 0; m <= s.trunc_x(); ++m)
    for (size_t n = 0; n < s.coeffs[m].size(); ++n)
      if (s.coeffs[m][n] != 0) os << m << " " << n << " " << s.coeffs[m][n].get_str() << "\n";
}

SeriesFile read_series(std::istream& is) {
  SeriesFile f;
  std::vector<std::pair<int, Rat>> entries;
  std::string line;
  int maxm = -1;
  while (std::getline(is, line)) {
    line = trim_ws(line);
    if (line.empty() || parse_header(line, f.headers)) continue;
    std::istringstream ls(line);
    int m;
    std::string coef;
    if (!(ls >> m >> coef) || m < 0) throw std::runtime_error("malformed series line: " + line);
    Rat v(coef, 10);
    v.canonicalize();
    entries.emplace_back(m, v);
    maxm = std::max(maxm, m);
  }
  int trunc = header_trunc(f.headers, maxm);
  if (trunc < 0) throw std::runtime_error("series file has no coefficients");
  f.series = RationalSeries(trunc);
  for (auto& [m, v] : entries)
    if (m <= trunc) f.series[m] = v;
  return f;
}

BivariateFile read_bivariate(std::istream& is) {
  BivariateFile f;
  struct E { int m, n; Int v; };
  std::vector<E> entries;
  std::string line;
  int maxm = -1;
  while (std::getline(is, line)) {
    line = trim_ws(line);
    if (line.empty() || parse_header(line, f.headers)) continue;
    std::istringstream ls(line);
    int m, n;
    std::string coef;
    if (!(ls >> m >> n >> coef) || m < 0 || n < 0)
      throw std::runtime_error("malformed bivariate line: " + line);
    entries.push_back({m, n, Int(coef, 10)});
    maxm = std::max(maxm, m);
  }
  int trunc = header_trunc(f.headers, maxm);
  if (trunc < 0) throw std::runtime_error("bivariate file has no coefficients");
  f.series = BivariateSeries(trunc);
  for (auto& e : entries)
    if (e.m <= trunc) f.series.add(e.m, e.n, e.v);
  return f;
}

SeriesFile read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_series(in);
}

BivariateFile read_bivariate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_bivariate(in);
}

}  // namespace punct

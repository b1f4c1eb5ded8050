#include "punct/diff_approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/eigen.hpp>
#include <set>
#include <stdexcept>

namespace punct {

using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

namespace {

struct Layout {
  int K = 0, L = 0, fixed = 0;
  std::vector<int> degrees;  // [N_K .. N_0]
  std::vector<int> offset;   // offset[i] = first column of Q_i in the full vector
  int deg(int i) const { return degrees[K - i]; }
};

Layout make_layout(int K, const std::vector<int>& degrees) {
  if (K < 1) throw std::invalid_argument("differential approximant order must be at least 1");
  if (static_cast<int>(degrees.size()) != K + 1)
    throw std::invalid_argument("degree vector needs K + 1 entries [N_K, ..., N_0]");
  Layout lay{K, 0, 0, degrees, std::vector<int>(K + 1)};
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("negative polynomial degree");
  for (int i = K; i >= 0; --i) {
    lay.offset[i] = lay.L;
    lay.L += lay.deg(i) + 1;
  }
  lay.fixed = lay.offset[K];  // Q_K(0)
  return lay;
}

// Matrix entry for unknown q_{i,l} in the order-n equation:
// sum_t binom(i,t) (-x_c)^{i-t} (n-l-t)^i f_{n-l-t}.
template <class T, class Coef>
T entry(const Coef& f, const T& xc, int n, int i, int l) {
  T s = 0;
  long binom = 1;
  for (int t = 0; t <= i; ++t) {
    if (t > 0) binom = binom * (i - t + 1) / t;
    const int m = n - l - t;
    if (m < 0) break;
    T w = T(binom);
    for (int e = 0; e < i - t; ++e) w *= -xc;
    T p = 1;
    for (int e = 0; e < i; ++e) p *= T(m);
    s += w * p * f(m);
  }
  return s;
}

// Reduced row echelon over Q; free unknowns set to zero. Returns the rank.
int solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat>& x) {
  const int rows = static_cast<int>(A.size()), cols = rows ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(A[i][c]) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const Rat inv = 1 / A[r][c];
    for (int j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(A[i][c]) == 0) continue;
      const Rat f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) throw std::runtime_error("approximant matching system is inconsistent");
  x.assign(cols, Rat(0));
  if (r == cols) {
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return r;
  }
  // Minimum-norm member, x = R^T (R R^T)^-1 b over the echelon rows R. Setting
  // the free unknowns to zero instead can pick a multiple that vanishes at x_c.
  std::vector<std::vector<Rat>> G(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int c = 0; c < cols; ++c) G[i][j] += A[i][c] * A[j][c];
  std::vector<Rat> y;
  solve_exact(G, std::vector<Rat>(b.begin(), b.begin() + r), y);
  for (int c = 0; c < cols; ++c)
    for (int i = 0; i < r; ++i) x[c] += A[i][c] * y[i];
  return r;
}

// Orders below the first nonzero coefficient give empty equations, so
// matching starts there.
template <class Coef>
int first_nonzero(const Coef& is_zero, int size) {
  for (int n = 0; n < size; ++n)
    if (!is_zero(n)) return n;
  throw std::invalid_argument("approximant of the zero series");
}

Real poly_eval(const std::vector<Real>& c, const Real& x) {
  Real s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

BiasedDA unpack(const Layout& lay, const std::vector<Real>& full, const Real& xc) {
  BiasedDA da;
  da.K = lay.K;
  da.degrees = lay.degrees;
  da.x_c = xc;
  da.matched = lay.L - 1;
  da.Q.resize(lay.K + 1);
  for (int i = 0; i <= lay.K; ++i)
    da.Q[i].assign(full.begin() + lay.offset[i], full.begin() + lay.offset[i] + lay.deg(i) + 1);
  return da;
}

}  // namespace

BiasedDA build_biased_da(const std::vector<Real>& coeffs, int K, const std::vector<int>& degrees, const Real& x_c) {
  const Layout lay = make_layout(K, degrees);
  const int eqs = lay.L - 1;
  const int size = static_cast<int>(coeffs.size());
  const int v = first_nonzero([&](int n) { return coeffs[n] == 0; }, size);
  if (size < v + eqs)
    throw std::invalid_argument("series too short: approximant needs " + std::to_string(v + eqs) + " coefficients");
  auto f = [&](int m) -> const Real& { return coeffs[m]; };

  RMatrix A(eqs, eqs);
  RVector b(eqs);
  for (int n = 0; n < eqs; ++n) {
    int col = 0;
    for (int i = K; i >= 0; --i)
      for (int l = 0; l <= lay.deg(i); ++l) {
        Real e = entry<Real>(f, x_c, v + n, i, l);
        if (lay.offset[i] + l == lay.fixed)
          b(n) = -e;
        else
          A(n, col++) = e;
      }
  }

  // Equilibrate: coefficients grow like x_c^{-n} and powers of n.
  RVector rs(eqs), cs(eqs);
  for (int n = 0; n < eqs; ++n) {
    Real m = abs(b(n));
    for (int j = 0; j < eqs; ++j) m = std::max(m, Real(abs(A(n, j))));
    rs(n) = m == 0 ? Real(1) : Real(1 / m);
  }
  A = rs.asDiagonal() * A;
  b = rs.asDiagonal() * b;
  for (int j = 0; j < eqs; ++j) {
    Real m = A.col(j).cwiseAbs().maxCoeff();
    cs(j) = m == 0 ? Real(1) : Real(1 / m);
  }
  A = A * cs.asDiagonal();

  Eigen::CompleteOrthogonalDecomposition<RMatrix> cod(A);
  const int digits = static_cast<int>(Real::default_precision());
  cod.setThreshold(pow(Real(10), -digits / 2));
  RVector y = cod.solve(b);
  RVector q = cs.asDiagonal() * y;

  std::vector<Real> full(lay.L);
  for (int j = 0, col = 0; j < lay.L; ++j) full[j] = j == lay.fixed ? Real(1) : q(col++);
  BiasedDA da = unpack(lay, full, x_c);
  da.first_order = v;
  da.null_dim = eqs - static_cast<int>(cod.rank());
  RVector res = A * y - b;
  da.max_residual = eqs ? Real(res.cwiseAbs().maxCoeff()) : Real(0);
  if (da.max_residual > pow(Real(10), -digits / 3))
    throw std::runtime_error("approximant matching system is inconsistent (residual " + to_string(da.max_residual, 6) +
                             ")");
  return da;
}

BiasedDA build_biased_da(const IntegerSeries& coeffs, int K, const std::vector<int>& degrees, const Rat& x_c) {
  const Layout lay = make_layout(K, degrees);
  const int eqs = lay.L - 1;
  const int v = first_nonzero([&](int n) { return sgn(coeffs[n]) == 0; }, coeffs.trunc() + 1);
  if (coeffs.trunc() + 1 < v + eqs)
    throw std::invalid_argument("series too short: approximant needs " + std::to_string(v + eqs) + " coefficients");
  auto f = [&](int m) { return Rat(coeffs[m]); };

  std::vector<std::vector<Rat>> A(eqs, std::vector<Rat>(eqs));
  std::vector<Rat> b(eqs);
  for (int n = 0; n < eqs; ++n) {
    int col = 0;
    for (int i = K; i >= 0; --i)
      for (int l = 0; l <= lay.deg(i); ++l) {
        Rat e = entry<Rat>(f, x_c, v + n, i, l);
        if (lay.offset[i] + l == lay.fixed)
          b[n] = -e;
        else
          A[n][col++] = e;
      }
  }
  std::vector<Rat> q;
  const int rank = solve_exact(A, b, q);
  std::vector<Real> full(lay.L);
  for (int j = 0, col = 0; j < lay.L; ++j) full[j] = j == lay.fixed ? Real(1) : to_real(q[col++]);
  BiasedDA da = unpack(lay, full, to_real(x_c));
  da.first_order = v;
  da.exact = true;
  da.null_dim = eqs - rank;
  da.max_residual = 0;
  return da;
}

IndicialResult indicial_exponents(const BiasedDA& da) {
  // sum_i w_i (lambda)_i in the monomial basis
  std::vector<Real> w(da.K + 1), poly(da.K + 1, Real(0)), falling{Real(1)};
  Real xp = 1, wmax = 0;
  for (int i = 0; i <= da.K; ++i) {
    w[i] = poly_eval(da.Q[i], da.x_c) * xp;
    xp *= da.x_c;
    wmax = std::max(wmax, Real(abs(w[i])));
    for (size_t j = 0; j < falling.size(); ++j) poly[j] += w[i] * falling[j];
    std::vector<Real> next(falling.size() + 1, Real(0));  // falling *= (lambda - i)
    for (size_t j = 0; j < falling.size(); ++j) {
      next[j + 1] += falling[j];
      next[j] -= falling[j] * i;
    }
    falling = std::move(next);
  }
  IndicialResult out;
  const Real tol = wmax * pow(Real(10), -static_cast<int>(Real::default_precision()) / 3);
  int deg = da.K;
  while (deg > 0 && abs(poly[deg]) <= tol) --deg;
  out.irregular = abs(w[da.K]) <= tol;
  if (deg == 0) return out;
  if (deg == 1) {
    out.exponents.emplace_back(-poly[0] / poly[1], Real(0));
  } else {
    RMatrix C = RMatrix::Zero(deg, deg);
    for (int j = 0; j < deg; ++j) C(0, j) = -poly[deg - 1 - j] / poly[deg];
    for (int j = 1; j < deg; ++j) C(j, j - 1) = 1;
    Eigen::EigenSolver<RMatrix> es(C, false);
    for (int j = 0; j < deg; ++j) out.exponents.push_back(es.eigenvalues()(j));
  }
  std::sort(out.exponents.begin(), out.exponents.end(),
            [](const auto& a, const auto& b) { return a.real() < b.real(); });
  return out;
}

std::vector<ScanRow> exponent_scan(const std::vector<Real>& coeffs, int K,
                                   const std::vector<std::vector<int>>& degree_grid, const Real& x_c) {
  std::vector<ScanRow> rows;
  for (const auto& d : degree_grid) {
    ScanRow row;
    row.degrees = d;
    try {
      BiasedDA da = build_biased_da(coeffs, K, d, x_c);
      row.ind = indicial_exponents(da);
      row.max_residual = da.max_residual;
      row.null_dim = da.null_dim;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> degree_grid(int K, int lo, int hi, int spread) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(K + 1, lo);
  while (true) {
    auto [mn, mx] = std::minmax_element(d.begin(), d.end());
    if (*mx - *mn <= spread) out.push_back(d);
    int i = K;
    while (i >= 0 && d[i] == hi) d[i--] = lo;
    if (i < 0) break;
    ++d[i];
  }
  return out;
}

std::vector<StableExponent> stable_exponents(const std::vector<ScanRow>& rows, const Real& tol, double min_fraction) {
  struct Pt {
    Real v;
    int row;
  };
  std::vector<Pt> pts;
  int valid = 0;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].error.empty()) continue;
    ++valid;
    for (const auto& e : rows[r].ind.exponents)
      if (abs(e.imag()) <= tol) pts.push_back({e.real(), static_cast<int>(r)});
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.v < b.v; });
  std::vector<StableExponent> out;
  for (size_t i = 0; i < pts.size();) {
    size_t j = i + 1;
    while (j < pts.size() && pts[j].v - pts[j - 1].v <= tol) ++j;
    std::set<int> members;
    Real sum = 0;
    for (size_t k = i; k < j; ++k) {
      members.insert(pts[k].row);
      sum += pts[k].v;
    }
    if (valid > 0 && members.size() >= min_fraction * valid) {
      StableExponent s;
      s.mean = sum / Real(static_cast<long>(j - i));
      s.scatter = 0;
      for (size_t k = i; k < j; ++k) s.scatter = std::max(s.scatter, Real(abs(pts[k].v - s.mean)));
      s.rows = static_cast<int>(members.size());
      out.push_back(s);
    }
    i = j;
  }
  return out;
}

}  // namespace punct

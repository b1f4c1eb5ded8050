#include "punct/transfer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace punct {

// ---- public helper types

std::vector<uint8_t> Signature::boundary_order() const {
  std::vector<uint8_t> out;
  for (int i = 0; i < kink_position && i < static_cast<int>(rows.size()); ++i) out.push_back(rows[i]);
  out.push_back(kink);
  for (int i = kink_position; i < static_cast<int>(rows.size()); ++i) out.push_back(rows[i]);
  return out;
}

bool Signature::valid() const {
  auto b = boundary_order();
  int first = -1, last = -1, ones = 0;
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    if (b[i] > 2) return false;
    if (b[i] == 1) {
      if (first < 0) first = i;
      last = i;
      ++ones;
    }
  }
  if (ones != 0 && ones != 2) return false;
  for (int i = 0; i < static_cast<int>(b.size());) {
    if (b[i] != 2) {
      ++i;
      continue;
    }
    int j = i;
    while (j < static_cast<int>(b.size()) && b[j] == 2) ++j;
    if ((j - i) % 2 != 0 || ones == 0 || i < first || j > last) return false;
    i = j;
  }
  return true;
}

void MomentState::shift_area(int a) {
  if (a == 0) return;
  for (auto& s : moments) {
    const int K = static_cast<int>(s.size()) - 1;
    for (int j = K; j >= 1; --j) {
      Int acc = 0;
      for (int i = 0; i < j; ++i) {
        Int term = binomial(j, i) * s[i];
        if (a < 0 && (j - i) % 2) term = -term;
        if (a != 1 && a != -1) {
          Int p;
          mpz_pow_ui(p.get_mpz_t(), Int(std::abs(a)).get_mpz_t(), j - i);
          term *= p;
        }
        acc += term;
      }
      s[j] += acc;
    }
  }
}

namespace {

// ---- numeric backends
//
// The sweep only adds and subtracts, so arithmetic modulo 2^(64L) is exact
// whenever the final totals are known to fit; Wide<L> is that ring.

template <int L>
struct Wide {
  uint64_t w[L] = {};
};

template <int L>
inline bool is_zero(const Wide<L>& a) {
  uint64_t acc = 0;
  for (int i = 0; i < L; ++i) acc |= a.w[i];
  return acc == 0;
}
template <int L>
inline void add_to(Wide<L>& d, const Wide<L>& s) {
  unsigned char c = 0;
  for (int i = 0; i < L; ++i) {
    unsigned long long out;
    c = __builtin_add_overflow(d.w[i], s.w[i], &out) | __builtin_add_overflow(out, c, &out);
    d.w[i] = out;
  }
}
template <int L>
inline void sub_from(Wide<L>& d, const Wide<L>& s) {
  unsigned char c = 0;
  for (int i = 0; i < L; ++i) {
    unsigned long long out;
    c = __builtin_sub_overflow(d.w[i], s.w[i], &out) | __builtin_sub_overflow(out, c, &out);
    d.w[i] = out;
  }
}
template <int L>
inline Int to_int(const Wide<L>& a) {
  Int r;
  mpz_import(r.get_mpz_t(), L, -1, sizeof(uint64_t), 0, 0, a.w);
  return r;
}
template <int L>
inline void set_one(Wide<L>& a) {
  a = Wide<L>{};
  a.w[0] = 1;
}

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline void add_to(Int& d, const Int& s) { d += s; }
inline void sub_from(Int& d, const Int& s) { d -= s; }
inline Int to_int(const Int& a) { return a; }
inline void set_one(Int& a) { a = 1; }

// ---- packed signatures: row i in bits 2i, 2i+1; kink in the top two bits

using Key = unsigned __int128;
constexpr int kKink = 63;
constexpr uint64_t kLowBits = 0x5555555555555555ULL;

struct KeyHash {
  size_t operator()(Key k) const {
    uint64_t x = static_cast<uint64_t>(k) ^ (static_cast<uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 29;
    return static_cast<size_t>(x);
  }
};

inline int field(Key s, int i) { return static_cast<int>((s >> (2 * i)) & 3); }
inline Key with_field(Key s, int i, int v) {
  s &= ~(Key(3) << (2 * i));
  return s | (Key(v) << (2 * i));
}
inline Key ones_mask(Key s) {
  const Key low = (Key(kLowBits) << 64) | kLowBits;
  return s & ~(s >> 1) & low;
}
inline int popcount(Key k) {
  return __builtin_popcountll(static_cast<uint64_t>(k)) + __builtin_popcountll(static_cast<uint64_t>(k >> 64));
}
inline Key rows_below(int y) {  // rows 0..y-1
  return y <= 0 ? Key(0) : ((Key(1) << (2 * y)) - 1);
}
inline int highest_set_field(Key k) {
  const uint64_t hi = static_cast<uint64_t>(k >> 64), lo = static_cast<uint64_t>(k);
  if (hi) return (127 - __builtin_clzll(hi)) / 2;
  if (lo) return (63 - __builtin_clzll(lo)) / 2;
  return -1;
}

Signature unpack(Key s, int H, int y) {
  Signature sig;
  sig.rows.resize(H + 1);
  for (int i = 0; i <= H; ++i) sig.rows[i] = static_cast<uint8_t>(field(s, i));
  sig.kink = static_cast<uint8_t>(field(s, kKink));
  sig.kink_position = y;
  return sig;
}

// ---- local vertex rules

struct Succ {
  Key sig;
  bool closes_puncture, opens_puncture;
};

struct VertexStep {
  Succ succ[2];
  int ns = 0;
  int completion_weight = 0;  // > 0 when the outer polygon closes here
};

// Vertex (x, y): left input is row y, bottom input is the kink.
inline VertexStep vertex_rules(Key s, int x, int y) {
  VertexStep st;
  const int L = field(s, y), B = field(s, kKink);
  auto put = [&](int right, int up, bool closes = false, bool opens = false) {
    st.succ[st.ns++] = {with_field(with_field(s, y, right), kKink, up), closes, opens};
  };
  if (L == 0 && B == 0) {
    put(0, 0);
    // A new puncture only strictly inside: an outer edge below and above.
    const Key ones = ones_mask(s);
    const int below = popcount(ones & rows_below(y));
    const int above = popcount(ones & ~rows_below(y + 1) & ~(Key(3) << (2 * kKink)));
    if (below == 1 && above == 1) put(2, 2, false, true);
  } else if (L == 0) {
    if (B == 1) {
      put(1, 0);
      put(0, 1);
    } else {
      put(2, 0);  // puncture edges turn right after coming up
    }
  } else if (B == 0) {
    if (L == 1) {
      put(1, 0);
      put(0, 1);
    } else {
      put(0, 2);  // and turn up after coming from the left
    }
  } else if (L == 2 && B == 2) {
    // A fresh puncture opened just below also presents 2 on the kink;
    // closing against it would fuse two diagonally touching cells.
    if (!(y >= 1 && field(s, y - 1) == 2)) put(0, 0, true);
  } else if (L == 1 && B == 1) {
    // Counted with height <= width; the transpose supplies the rest.
    st.completion_weight = y < x ? 2 : (y == x ? 1 : 0);
  }
  return st;
}

struct Admission {
  bool ok = false;
  int r_limit = 0;  // largest puncture count that can still fit
  int area = 0;     // area increment
};

inline Admission admit(const Succ& sc, int x, int y, int H, int m) {
  Admission ad;
  const Key t = sc.sig;
  if (y == H && field(t, kKink) != 0) return ad;
  const Key ones = ones_mask(t);
  int u = highest_set_field(ones & ~(Key(3) << (2 * kKink)));
  if (field(t, kKink) == 1) u = std::max(u, y + 1);
  const int outer_min = std::max(x, u) + u;
  if (outer_min > m) return ad;
  ad.ok = true;
  ad.r_limit = (m - outer_min) / 2;
  // The cell above the new right edge is inside iff one outer edge lies at or below it.
  const bool inside = popcount(ones & rows_below(y + 1)) == 1;
  ad.area = (inside ? 1 : 0) - (sc.closes_puncture ? 1 : 0);
  return ad;
}

void validate_or_throw(Key t, int H, int x, int y) {
  if (!unpack(t, H, y + 1 <= H ? y + 1 : 0).valid())
    throw std::logic_error("invalid signature produced at x=" + std::to_string(x) + " y=" + std::to_string(y));
}

// ---- moment sweep over flat storage

// Open-addressing table from signatures to rows of a flat value array.
template <class T>
class StateTable {
 public:
  explicit StateTable(int stride) : stride_(stride) {}

  void reset(size_t expected) {
    keys_.clear();
    vals_.clear();
    size_t cap = 16;
    while (cap < 2 * expected + 16) cap <<= 1;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
  }
  size_t size() const { return keys_.size(); }
  Key key(size_t i) const { return keys_[i]; }
  T* row(size_t i) { return vals_.data() + i * stride_; }

  size_t find_or_insert(Key k) {
    size_t h = KeyHash{}(k) & mask_;
    while (slots_[h]) {
      const size_t i = slots_[h] - 1;
      if (keys_[i] == k) return i;
      h = (h + 1) & mask_;
    }
    if (2 * (keys_.size() + 1) > slots_.size()) {
      grow();
      return find_or_insert(k);
    }
    keys_.push_back(k);
    vals_.resize(vals_.size() + stride_);
    slots_[h] = static_cast<uint32_t>(keys_.size());
    return keys_.size() - 1;
  }

 private:
  void grow() {
    std::vector<uint32_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    mask_ = slots_.size() - 1;
    for (size_t i = 0; i < keys_.size(); ++i) {
      size_t h = KeyHash{}(keys_[i]) & mask_;
      while (slots_[h]) h = (h + 1) & mask_;
      slots_[h] = static_cast<uint32_t>(i + 1);
    }
  }

  int stride_;
  size_t mask_ = 0;
  std::vector<Key> keys_;
  std::vector<uint32_t> slots_;
  std::vector<T> vals_;
};

template <class T>
struct MomentTotals {
  std::vector<std::vector<std::vector<T>>> t;  // [r][j][hp], binomial moments
};

// Each state carries, per puncture count, the binomial moments
// F_j = sum over partial configurations of binom(area, j). An area step of +1
// multiplies the generating polynomial sum_j F_j e^j by (1+e), a step of -1
// divides by it.
template <class T>
MomentTotals<T> sweep_moments(int m, int R, int K, const TmOptions& opt, TmStats& stats) {
  const int H = m / 2;
  const int S = K + 1, stride = (R + 1) * S;
  MomentTotals<T> tot;
  tot.t.assign(R + 1, std::vector<std::vector<T>>(K + 1, std::vector<T>(m + 1)));

  StateTable<T> cur(stride), nxt(stride);
  cur.reset(1);
  {
    const size_t i = cur.find_or_insert(with_field(with_field(Key(0), 0, 1), kKink, 1));
    set_one(cur.row(i)[0]);  // the corner cell: area 1
    if (K >= 1) set_one(cur.row(i)[1]);
  }
  std::vector<T> tmp(S);

  for (int x = 0; x <= m && cur.size(); ++x) {
    for (int y = (x == 0 ? 1 : 0); y <= H && cur.size(); ++y) {
      nxt.reset(cur.size() + cur.size() / 2);
      for (size_t si = 0; si < cur.size(); ++si) {
        const Key s = cur.key(si);
        const VertexStep st = vertex_rules(s, x, y);
        if (st.completion_weight) {
          const T* src = cur.row(si);
          for (int r = 0; r <= R; ++r) {
            const int hp = x + y + 2 * r;
            if (hp > m) break;
            for (int k = 0; k <= K; ++k)
              for (int w = 0; w < st.completion_weight; ++w) add_to(tot.t[r][k][hp], src[r * S + k]);
          }
          continue;
        }
        for (int i = 0; i < st.ns; ++i) {
          const Admission ad = admit(st.succ[i], x, y, H, m);
          if (!ad.ok) continue;
          const int dr = st.succ[i].opens_puncture ? 1 : 0;
          const int rmax_src = std::min(R, ad.r_limit) - dr;
          const T* src = cur.row(si);
          bool any = false;
          for (int q = 0; q < (rmax_src + 1) * S && !any; ++q) any = !is_zero(src[q]);
          if (!any) continue;
          if (opt.validate) validate_or_throw(st.succ[i].sig, H, x, y);
          const size_t di = nxt.find_or_insert(st.succ[i].sig);
          T* dst = nxt.row(di);
          src = cur.row(si);
          ++stats.transitions;
          for (int r = 0; r <= rmax_src; ++r) {
            const T* a = src + r * S;
            T* d = dst + (r + dr) * S;
            if (ad.area == 0) {
              for (int j = 0; j <= K; ++j) add_to(d[j], a[j]);
            } else if (ad.area > 0) {
              add_to(d[0], a[0]);
              for (int j = 1; j <= K; ++j) {
                add_to(d[j], a[j]);
                add_to(d[j], a[j - 1]);
              }
            } else {
              tmp[0] = a[0];
              for (int j = 1; j <= K; ++j) {
                tmp[j] = a[j];
                sub_from(tmp[j], tmp[j - 1]);
              }
              for (int j = 0; j <= K; ++j) add_to(d[j], tmp[j]);
            }
          }
        }
      }
      std::swap(cur, nxt);
      stats.max_states = std::max(stats.max_states, cur.size());
    }
  }
  return tot;
}

// ---- area-resolved sweep (small sizes; values are per-r area polynomials)

struct AreaValue {
  std::vector<std::vector<Int>> by_r;  // [r][area]
};

std::vector<BivariateSeries> sweep_area(int m, int R, const TmOptions& opt, TmStats& stats) {
  const int H = m / 2;
  std::vector<BivariateSeries> totals(R + 1, BivariateSeries(m));
  std::unordered_map<Key, AreaValue, KeyHash> cur, nxt;
  AreaValue init;
  init.by_r.assign(R + 1, {});
  init.by_r[0] = {Int(0), Int(1)};
  cur.emplace(with_field(with_field(Key(0), 0, 1), kKink, 1), init);

  for (int x = 0; x <= m && !cur.empty(); ++x) {
    for (int y = (x == 0 ? 1 : 0); y <= H && !cur.empty(); ++y) {
      nxt.clear();
      for (auto& [s, val] : cur) {
        const VertexStep st = vertex_rules(s, x, y);
        if (st.completion_weight) {
          for (int r = 0; r <= R; ++r) {
            const int hp = x + y + 2 * r;
            if (hp > m) break;
            for (size_t n = 0; n < val.by_r[r].size(); ++n)
              if (sgn(val.by_r[r][n])) totals[r].add(hp, static_cast<int>(n), val.by_r[r][n] * st.completion_weight);
          }
          continue;
        }
        for (int i = 0; i < st.ns; ++i) {
          const Admission ad = admit(st.succ[i], x, y, H, m);
          if (!ad.ok) continue;
          if (opt.validate) validate_or_throw(st.succ[i].sig, H, x, y);
          const int dr = st.succ[i].opens_puncture ? 1 : 0;
          AreaValue& dst = nxt[st.succ[i].sig];
          if (dst.by_r.empty()) dst.by_r.assign(R + 1, {});
          for (int r = 0; r + dr <= std::min(R, ad.r_limit); ++r) {
            const auto& a = val.by_r[r];
            auto& d = dst.by_r[r + dr];
            for (size_t n = 0; n < a.size(); ++n) {
              if (!sgn(a[n])) continue;
              const long target = static_cast<long>(n) + ad.area;
              if (target < 0) throw std::logic_error("negative partial area");
              if (d.size() <= static_cast<size_t>(target)) d.resize(target + 1);
              d[target] += a[n];
            }
          }
          ++stats.transitions;
        }
      }
      std::swap(cur, nxt);
      stats.max_states = std::max(stats.max_states, cur.size());
    }
  }
  for (auto& b : totals) b.trim();
  return totals;
}

void check_args(int m_max, int r_max, int k_max) {
  if (m_max < 2) throw std::invalid_argument("m_max must be >= 2");
  if (m_max > kTmMaxM) throw std::invalid_argument("m_max beyond " + std::to_string(kTmMaxM));
  if (r_max < 0 || r_max > kTmMaxR) throw std::invalid_argument("r_max outside [0," + std::to_string(kTmMaxR) + "]");
  if (k_max < 0 || k_max > kTmMaxK) throw std::invalid_argument("k_max outside [0," + std::to_string(kTmMaxK) + "]");
}

template <class T>
TmTable run_moments(int m_max, int r_max, int k_max, const TmOptions& opt) {
  TmTable tab;
  tab.m_max = m_max;
  tab.r_max = r_max;
  tab.k_max = k_max;
  auto tot = sweep_moments<T>(m_max, r_max, k_max, opt, tab.stats);
  tab.p.assign(r_max + 1, std::vector<IntegerSeries>(k_max + 1, IntegerSeries(m_max)));
  for (int r = 0; r <= r_max; ++r)
    for (int m = 0; m <= m_max; ++m) {
      std::vector<Int> F(k_max + 1);
      for (int k = 0; k <= k_max; ++k) F[k] = to_int(tot.t[r][k][m]);
      auto P = power_from_binomial_moments(F);
      for (int k = 0; k <= k_max; ++k) tab.p[r][k][m] = P[k];
    }
  return tab;
}

// Bits needed for any final binomial moment: at most 2 * Catalan(m-1) outer
// shapes, binom(amax, r) hole sets and binom(amax, K) for the moment.
int limbs_needed(int m, int R, int K) {
  const long amax = static_cast<long>(m / 2) * ((m + 1) / 2);
  Int bound = 2 * binomial(2 * m - 2, m - 1) * binomial(amax, R) * binomial(amax, K);
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
  return static_cast<int>((bits + 63) / 64);
}

// ---- staircase-shaped holes
//
// Field values: 1 outer walk, 2 lower walk of a hole, 3 upper walk of a hole.
// Between the two 1s the hole walks alternate 2,3,2,3 in boundary order, so a
// 3 on row y directly above a 2 on the kink always belong to the same hole.

inline Key nonzero_mask(Key s) {
  const Key low = (Key(kLowBits) << 64) | kLowBits;
  return (s | (s >> 1)) & low;
}

struct HoleSucc {
  Key sig;
  bool opens;
  int lower_edges;  // new edges on the lower walk of a hole: adds to the hole half-perimeter
};

struct HoleStep {
  HoleSucc succ[2];
  int ns = 0;
  int completion_weight = 0;
};

inline HoleStep hole_rules(Key s, int x, int y) {
  HoleStep st;
  const int L = field(s, y), B = field(s, kKink);
  auto put = [&](int right, int up, bool opens, int lower) {
    st.succ[st.ns++] = {with_field(with_field(s, y, right), kKink, up), opens, lower};
  };
  if (L == 0 && B == 0) {
    put(0, 0, false, 0);
    const Key ones = ones_mask(s);
    const int below = popcount(ones & rows_below(y));
    const int above = popcount(ones & ~rows_below(y + 1) & ~(Key(3) << (2 * kKink)));
    const int holes_below = popcount(nonzero_mask(s) & rows_below(y)) - below;
    if (below == 1 && above == 1 && holes_below % 2 == 0) put(2, 3, true, 1);
  } else if (L == 0 || B == 0) {
    const int v = L | B;
    put(v, 0, false, v == 2);
    put(0, v, false, v == 2);
  } else if (L == 3 && B == 2) {
    put(0, 0, false, 0);
  } else if (L == 1 && B == 1) {
    st.completion_weight = y < x ? 2 : (y == x ? 1 : 0);
  }
  return st;
}

struct HoleAdmission {
  bool ok = false;
  int budget = 0;  // hole half-perimeter still affordable
  int area = 0;
};

inline HoleAdmission admit_hole(Key t, int x, int y, int H, int m) {
  HoleAdmission ad;
  if (y == H && field(t, kKink) != 0) return ad;
  const Key ones = ones_mask(t);
  int u = highest_set_field(ones & ~(Key(3) << (2 * kKink)));
  if (field(t, kKink) == 1) u = std::max(u, y + 1);
  const int outer_min = std::max(x, u) + u;
  if (outer_min > m) return ad;
  // Every open hole still needs its lower walk to climb to its upper walk.
  int climb = 0, h2 = -1;
  const int kink = field(t, kKink);
  auto visit = [&](int v, int h) {
    if (v == 2) h2 = h;
    else if (v == 3) climb += h - h2;
  };
  Key nz = nonzero_mask(t) & ~(Key(3) << (2 * kKink));
  bool kink_done = kink == 0;
  while (nz) {
    const uint64_t lo = static_cast<uint64_t>(nz);
    const int bit = lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<uint64_t>(nz >> 64));
    const int row = bit / 2;
    if (!kink_done && row > y) {
      visit(kink, y + 1);
      kink_done = true;
    }
    visit(field(t, row), row);
    nz &= nz - 1;
  }
  if (!kink_done) visit(kink, y + 1);
  if (outer_min + climb > m) return ad;
  ad.ok = true;
  ad.budget = m - outer_min - climb;
  // Inside the punctured polygon iff an odd number of walk edges lie at or below.
  ad.area = popcount(nonzero_mask(t) & rows_below(y + 1)) % 2;
  return ad;
}

template <class T>
struct HoleTotals {
  std::vector<T> t;  // [r][s][j][hp]
};

template <class T>
HoleTotals<T> sweep_holes(int m, int R, int Smax, int K, TmStats& stats) {
  const int H = m / 2;
  const int J = K + 1, SJ = (Smax + 1) * J, stride = (R + 1) * SJ;
  auto tidx = [&](int r, int s, int j, int hp) { return ((static_cast<size_t>(r) * (Smax + 1) + s) * J + j) * (m + 1) + hp; };
  HoleTotals<T> tot;
  tot.t.assign(static_cast<size_t>(R + 1) * SJ * (m + 1), T{});

  StateTable<T> cur(stride), nxt(stride);
  cur.reset(1);
  {
    const size_t i = cur.find_or_insert(with_field(with_field(Key(0), 0, 1), kKink, 1));
    set_one(cur.row(i)[0]);
    if (K >= 1) set_one(cur.row(i)[1]);
  }

  for (int x = 0; x <= m && cur.size(); ++x) {
    for (int y = (x == 0 ? 1 : 0); y <= H && cur.size(); ++y) {
      nxt.reset(cur.size() + cur.size() / 2);
      for (size_t si = 0; si < cur.size(); ++si) {
        const Key s = cur.key(si);
        const HoleStep st = hole_rules(s, x, y);
        if (st.completion_weight) {
          const T* src = cur.row(si);
          for (int r = 0; r <= R; ++r)
            for (int hs = 0; hs <= Smax && x + y + hs <= m; ++hs)
              for (int j = 0; j <= K; ++j)
                for (int w = 0; w < st.completion_weight; ++w)
                  add_to(tot.t[tidx(r, hs, j, x + y + hs)], src[r * SJ + hs * J + j]);
          continue;
        }
        for (int i = 0; i < st.ns; ++i) {
          const HoleSucc& sc = st.succ[i];
          const HoleAdmission ad = admit_hole(sc.sig, x, y, H, m);
          if (!ad.ok) continue;
          const int dr = sc.opens ? 1 : 0, ds = sc.lower_edges;
          const int smax_dst = std::min(Smax, ad.budget);
          if (smax_dst < ds) continue;
          const T* src = cur.row(si);
          bool any = false;
          for (int r = 0; r + dr <= R && !any; ++r)
            for (int q = 0; q < (smax_dst - ds + 1) * J && !any; ++q) any = !is_zero(src[r * SJ + q]);
          if (!any) continue;
          const size_t di = nxt.find_or_insert(sc.sig);
          T* dst = nxt.row(di);
          src = cur.row(si);
          ++stats.transitions;
          for (int r = 0; r + dr <= R; ++r)
            for (int hs = 0; hs + ds <= smax_dst; ++hs) {
              const T* a = src + r * SJ + hs * J;
              T* d = dst + (r + dr) * SJ + (hs + ds) * J;
              add_to(d[0], a[0]);
              for (int j = 1; j <= K; ++j) {
                add_to(d[j], a[j]);
                if (ad.area) add_to(d[j], a[j - 1]);
              }
            }
        }
      }
      std::swap(cur, nxt);
      stats.max_states = std::max(stats.max_states, cur.size());
    }
  }
  return tot;
}

template <class T>
HoleTable run_holes(int m_max, int r_max, int s_max, int k_max) {
  HoleTable tab;
  tab.m_max = m_max;
  tab.r_max = r_max;
  tab.s_max = s_max;
  tab.k_max = k_max;
  auto tot = sweep_holes<T>(m_max, r_max, s_max, k_max, tab.stats);
  const int J = k_max + 1;
  tab.p.assign(r_max + 1, std::vector<std::vector<IntegerSeries>>(s_max + 1, std::vector<IntegerSeries>(J, IntegerSeries(m_max))));
  for (int r = 0; r <= r_max; ++r)
    for (int hs = 0; hs <= s_max; ++hs)
      for (int m = 0; m <= m_max; ++m) {
        std::vector<Int> F(J);
        for (int j = 0; j < J; ++j) F[j] = to_int(tot.t[((static_cast<size_t>(r) * (s_max + 1) + hs) * J + j) * (m_max + 1) + m]);
        auto P = power_from_binomial_moments(F);
        for (int j = 0; j < J; ++j) tab.p[r][hs][j][m] = P[j];
      }
  return tab;
}

int hole_limbs_needed(int m, int R, int K) {
  const long amax = static_cast<long>(m / 2) * ((m + 1) / 2);
  Int per_hole = Int(amax) << (2 * m);  // shapes of half-perimeter <= m times positions
  Int bound = 2 * binomial(2 * m - 2, m - 1) * binomial(amax, K);
  for (int r = 0; r < R; ++r) bound *= per_hole;
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
  return static_cast<int>((bits + 63) / 64);
}

}  // namespace

TmTable tm_enumerate(int m_max, int r_max, int k_max, const TmOptions& opt) {
  check_args(m_max, r_max, k_max);
  TmTable t;
  const int L = opt.force_big ? 99 : limbs_needed(m_max, r_max, k_max);
  if (L <= 2)
    t = run_moments<Wide<2>>(m_max, r_max, k_max, opt);
  else if (L == 3)
    t = run_moments<Wide<3>>(m_max, r_max, k_max, opt);
  else if (L == 4)
    t = run_moments<Wide<4>>(m_max, r_max, k_max, opt);
  else if (L == 5)
    t = run_moments<Wide<5>>(m_max, r_max, k_max, opt);
  else if (L <= 6)
    t = run_moments<Wide<6>>(m_max, r_max, k_max, opt);
  else if (L <= 8)
    t = run_moments<Wide<8>>(m_max, r_max, k_max, opt);
  else {
    t = run_moments<Int>(m_max, r_max, k_max, opt);
    t.stats.used_big_integers = true;
  }
  return t;
}

std::vector<BivariateSeries> tm_enumerate_bivariate(int m_max, int r_max, const TmOptions& opt,
                                                    TmStats* stats) {
  check_args(m_max, r_max, 0);
  TmStats local;
  auto out = sweep_area(m_max, r_max, opt, local);
  local.used_big_integers = true;
  if (stats) *stats = local;
  return out;
}

HoleTable tm_enumerate_staircase_holes(int m_max, int r_max, int s_max, int k_max, const TmOptions& opt) {
  check_args(m_max, r_max, k_max);
  if (s_max < 0) throw std::invalid_argument("s_max must be >= 0");
  s_max = std::min(s_max, m_max);
  const int L = opt.force_big ? 99 : hole_limbs_needed(m_max, r_max, k_max);
  HoleTable t;
  if (L <= 2)
    t = run_holes<Wide<2>>(m_max, r_max, s_max, k_max);
  else if (L <= 4)
    t = run_holes<Wide<4>>(m_max, r_max, s_max, k_max);
  else if (L <= 6)
    t = run_holes<Wide<6>>(m_max, r_max, s_max, k_max);
  else if (L <= 8)
    t = run_holes<Wide<8>>(m_max, r_max, s_max, k_max);
  else {
    t = run_holes<Int>(m_max, r_max, s_max, k_max);
    t.stats.used_big_integers = true;
  }
  return t;
}

IntegerSeries HoleTable::arbitrary(int r, int k) const {
  if (s_max < m_max) throw std::logic_error("hole sizes were truncated; rerun with s_max >= m_max");
  IntegerSeries out(m_max);
  for (int hs = 0; hs <= s_max; ++hs)
    for (int m = 0; m <= m_max; ++m) out[m] += at(r, hs, k)[m];
  return out;
}

}  // namespace punct

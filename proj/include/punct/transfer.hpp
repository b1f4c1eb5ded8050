#pragma once

#include <cstdint>
#include <vector>

#include "punct/series.hpp"

namespace punct {

constexpr int kTmMaxM = 124;  // signature of at most 63 horizontal edges plus the kink
constexpr int kTmMaxR = 10;
constexpr int kTmMaxK = 16;

// Boundary-line state: occupations of the horizontal edges crossed by the line
// (index = row) and of the vertical kink edge just below kink_position.
// 0 = empty, 1 = outer walk, 2 = edge of a unit-cell puncture.
struct Signature {
  std::vector<uint8_t> rows;
  uint8_t kink = 0;
  int kink_position = 0;

  // Occupations in boundary order: rows below the kink, the kink, rows above.
  std::vector<uint8_t> boundary_order() const;
  // Zero or two 1s; 2s only strictly between the 1s, in runs of even length.
  bool valid() const;
};

// Per puncture count r, the area moments S_j = sum over partial configurations
// of (partial area)^j, j = 0..K.
struct MomentState {
  std::vector<std::vector<Int>> moments;  // [r][j]
  // S'_j = sum_i binom(j,i) a^{j-i} S_i
  void shift_area(int a);
};

struct TmOptions {
  bool validate = false;  // check every produced signature
  bool force_big = false;  // use arbitrary-precision accumulators throughout
};

struct TmStats {
  size_t max_states = 0;
  size_t transitions = 0;
  bool used_big_integers = false;
};

// p[r][k] = k-th area moment series of staircase polygons with r minimal
// punctures, by total half-perimeter.
struct TmTable {
  int m_max = 0, r_max = 0, k_max = 0;
  std::vector<std::vector<IntegerSeries>> p;
  TmStats stats;
  const IntegerSeries& at(int r, int k) const { return p.at(r).at(k); }
};

TmTable tm_enumerate(int m_max, int r_max, int k_max, const TmOptions& opt = {});

// Area-resolved counts: result[r] is the bivariate series in (x, q).
std::vector<BivariateSeries> tm_enumerate_bivariate(int m_max, int r_max, const TmOptions& opt = {},
                                                    TmStats* stats = nullptr);

// Staircase polygons with r holes that are themselves staircase polygons
// (vertex-disjoint from the outer boundary and from each other): p[r][s][k] is
// the k-th area moment series for total hole half-perimeter s.
struct HoleTable {
  int m_max = 0, r_max = 0, s_max = 0, k_max = 0;
  std::vector<std::vector<std::vector<IntegerSeries>>> p;
  TmStats stats;
  const IntegerSeries& at(int r, int s, int k) const { return p.at(r).at(s).at(k); }
  // Summed over all hole sizes; needs s_max >= m_max.
  IntegerSeries arbitrary(int r, int k) const;
};

HoleTable tm_enumerate_staircase_holes(int m_max, int r_max, int s_max, int k_max, const TmOptions& opt = {});

}  // namespace punct

#include "punct/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace punct {

int StaircaseShape::area() const {
  int a = 0;
  for (int i = 0; i < width(); ++i) a += ceilings[i] - floors[i];
  return a;
}

bool StaircaseShape::valid() const {
  if (floors.empty() || floors.size() != ceilings.size()) return false;
  for (int i = 0; i < width(); ++i) {
    if (ceilings[i] <= floors[i]) return false;
    if (i > 0) {
      if (floors[i] < floors[i - 1] || ceilings[i] < ceilings[i - 1]) return false;
      if (floors[i] >= ceilings[i - 1]) return false;
    }
  }
  return true;
}

namespace {

void extend(StaircaseShape& s, int hp_max, const std::function<void(const StaircaseShape&)>& visit) {
  visit(s);
  const int b = s.floors.back(), t = s.ceilings.back();
  const int w = s.width();
  for (int nb = b; nb < t; ++nb)
    for (int nt = t; w + 1 + nt <= hp_max; ++nt) {
      s.floors.push_back(nb);
      s.ceilings.push_back(nt);
      extend(s, hp_max, visit);
      s.floors.pop_back();
      s.ceilings.pop_back();
    }
}

}  // namespace

void for_each_staircase(int hp_max, const std::function<void(const StaircaseShape&)>& visit) {
  StaircaseShape s;
  for (int t = 1; 1 + t <= hp_max; ++t) {
    s.floors = {0};
    s.ceilings = {t};
    extend(s, hp_max, visit);
  }
}

BivariateSeries oracle_staircase(int m_max) {
  if (m_max < 2) throw std::invalid_argument("oracle_staircase needs m_max >= 2");
  if (m_max > 70) throw std::invalid_argument("oracle_staircase: m_max > 70 overflows 128-bit counts");
  using U = unsigned __int128;
  const int amax = m_max * m_max / 4 + 1;
  // dp[hp][c][area]: partial polygons whose last column has height c, with
  // hp = columns so far + current top row.
  std::vector<std::vector<std::vector<U>>> dp(
      m_max + 1, std::vector<std::vector<U>>(m_max + 1));
  auto cell = [&](int hp, int c) -> std::vector<U>& {
    auto& v = dp[hp][c];
    if (v.empty()) v.assign(amax + 1, 0);
    return v;
  };
  for (int c = 1; 1 + c <= m_max; ++c) cell(1 + c, c)[c] += 1;

  BivariateSeries out(m_max);
  for (int hp = 2; hp <= m_max; ++hp) {
    for (int c = 1; c <= m_max; ++c) {
      auto& src = dp[hp][c];
      if (src.empty()) continue;
      for (int a = 0; a <= amax; ++a)
        if (src[a]) {
          Int v;
          mpz_import(v.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, &src[a]);
          out.add(hp, a, v);
        }
      // Next column: floor raised by d in [0, c-1], top raised by e >= 0.
      for (int e = 0; hp + 1 + e <= m_max; ++e)
        for (int d = 0; d < c; ++d) {
          const int nc = c - d + e;
          auto& dst = cell(hp + 1 + e, nc);
          for (int a = 0; a + nc <= amax; ++a)
            if (src[a]) dst[a + nc] += src[a];
        }
      std::vector<U>().swap(src);
    }
  }
  out.trim();
  return out;
}

std::map<std::pair<int, int>, Int> staircase_box_counts(int hp_max) {
  std::map<std::pair<int, int>, Int> counts;
  for_each_staircase(hp_max, [&](const StaircaseShape& s) { counts[{s.width(), s.height()}] += 1; });
  return counts;
}

// ---- punctured staircases, interval route

namespace {

struct HoleShape {
  StaircaseShape shape;
  int hp = 0, area = 0, w = 0;
  // Closed y-range of the hole on its vertical lines j = 0..w.
  std::vector<int> lo, hi;
};

std::vector<HoleShape> hole_shapes(int hp_max, bool unit_only) {
  std::vector<HoleShape> out;
  for_each_staircase(hp_max, [&](const StaircaseShape& s) {
    if (unit_only && s.half_perimeter() != 2) return;
    HoleShape h;
    h.shape = s;
    h.hp = s.half_perimeter();
    h.area = s.area();
    h.w = s.width();
    for (int j = 0; j <= h.w; ++j) {
      h.lo.push_back(s.floors[std::max(j - 1, 0)]);
      h.hi.push_back(s.ceilings[std::min(j, h.w - 1)]);
    }
    out.push_back(std::move(h));
  });
  return out;
}

struct Placement {
  int shape, a, c;
};

// Allowed vertical offsets of hole h at horizontal offset a, as [cmin, cmax].
// Interior lattice points on line x (1 <= x <= w-1) have floors[x] < y < ceilings[x-1].
std::pair<int, int> offset_range(const StaircaseShape& o, const HoleShape& h, int a) {
  int cmin = -1000000, cmax = 1000000;
  for (int j = 0; j <= h.w; ++j) {
    const int x = a + j;
    cmin = std::max(cmin, o.floors[x] - h.lo[j] + 1);
    cmax = std::min(cmax, o.ceilings[x - 1] - h.hi[j] - 1);
  }
  return {cmin, cmax};
}

bool holes_disjoint(const HoleShape& A, const Placement& pa, const HoleShape& B, const Placement& pb) {
  const int x0 = std::max(pa.a, pb.a), x1 = std::min(pa.a + A.w, pb.a + B.w);
  for (int x = x0; x <= x1; ++x) {
    const int ja = x - pa.a, jb = x - pb.a;
    const int alo = pa.c + A.lo[ja], ahi = pa.c + A.hi[ja];
    const int blo = pb.c + B.lo[jb], bhi = pb.c + B.hi[jb];
    if (alo <= bhi && blo <= ahi) return false;
  }
  return true;
}

struct PunctureBudget {
  int min_total, max_single;
  bool unit_only;
};

PunctureBudget budget(int m_max, int r, PunctureSpec spec) {
  switch (spec.kind) {
    case PunctureKind::minimal:
      return {2 * r, 2, true};
    case PunctureKind::fixed_total:
      if (spec.s < 2 * r) throw std::invalid_argument("fixed total hole size below 2r");
      return {spec.s, spec.s - 2 * (r - 1), false};
    case PunctureKind::arbitrary:
      return {2 * r, m_max, false};
  }
  return {};
}

bool total_ok(PunctureSpec spec, int total) {
  switch (spec.kind) {
    case PunctureKind::minimal:
      return true;
    case PunctureKind::fixed_total:
      return total == spec.s;
    case PunctureKind::arbitrary:
      return true;
  }
  return false;
}

void check_r(int r) {
  if (r != 1 && r != 2) throw std::invalid_argument("punctured staircase oracle supports r in {1,2}");
}

}  // namespace

BivariateSeries oracle_punctured_staircase(int m_max, int r, PunctureSpec spec) {
  check_r(r);
  if (m_max < 2) throw std::invalid_argument("m_max must be >= 2");
  const PunctureBudget bud = budget(m_max, r, spec);
  BivariateSeries out(m_max);
  const int outer_max = m_max - bud.min_total;
  if (outer_max < 6) return out;
  const auto shapes = hole_shapes(std::min(bud.max_single, outer_max - 4), bud.unit_only);

  std::vector<Placement> places;
  for_each_staircase(outer_max, [&](const StaircaseShape& o) {
    const int L = o.half_perimeter(), w = o.width(), area = o.area();
    const int room = m_max - L;  // hole half-perimeter still available
    if (room < bud.min_total) return;
    if (r == 1) {
      for (size_t k = 0; k < shapes.size(); ++k) {
        const HoleShape& h = shapes[k];
        if (h.hp > room || !total_ok(spec, h.hp)) continue;
        long n = 0;
        for (int a = 1; a + h.w <= w - 1; ++a) {
          auto [cmin, cmax] = offset_range(o, h, a);
          if (cmax >= cmin) n += cmax - cmin + 1;
        }
        if (n) out.add(L + h.hp, area - h.area, n);
      }
      return;
    }
    places.clear();
    for (size_t k = 0; k < shapes.size(); ++k) {
      const HoleShape& h = shapes[k];
      if (h.hp > room - 2) continue;
      for (int a = 1; a + h.w <= w - 1; ++a) {
        auto [cmin, cmax] = offset_range(o, h, a);
        for (int c = cmin; c <= cmax; ++c) places.push_back({static_cast<int>(k), a, c});
      }
    }
    for (size_t i = 0; i < places.size(); ++i)
      for (size_t j = i + 1; j < places.size(); ++j) {
        const HoleShape& A = shapes[places[i].shape];
        const HoleShape& B = shapes[places[j].shape];
        const int tot = A.hp + B.hp;
        if (tot > room || !total_ok(spec, tot)) continue;
        if (!holes_disjoint(A, places[i], B, places[j])) continue;
        out.add(L + tot, area - A.area - B.area, 1);
      }
  });
  out.trim();
  return out;
}

// ---- punctured staircases, literal cell-set route

namespace {

using Pt = std::pair<int, int>;

struct CellSets {
  std::set<Pt> cells;
  std::set<Pt> boundary;  // lattice vertices on the polygon boundary
};

CellSets cell_sets(const StaircaseShape& s, int dx, int dy) {
  CellSets cs;
  for (int i = 0; i < s.width(); ++i)
    for (int y = s.floors[i]; y < s.ceilings[i]; ++y) cs.cells.insert({i + dx, y + dy});
  for (const auto& [x, y] : cs.cells)
    for (int vx = x; vx <= x + 1; ++vx)
      for (int vy = y; vy <= y + 1; ++vy) {
        bool inner = cs.cells.count({vx - 1, vy - 1}) && cs.cells.count({vx, vy - 1}) &&
                     cs.cells.count({vx - 1, vy}) && cs.cells.count({vx, vy});
        if (!inner) cs.boundary.insert({vx, vy});
      }
  return cs;
}

template <class S>
bool disjoint(const S& a, const S& b) {
  for (const auto& p : a)
    if (b.count(p)) return false;
  return true;
}

bool subset(const std::set<Pt>& a, const std::set<Pt>& b) {
  for (const auto& p : a)
    if (!b.count(p)) return false;
  return true;
}

}  // namespace

BivariateSeries oracle_punctured_staircase_literal(int m_max, int r, PunctureSpec spec) {
  check_r(r);
  const PunctureBudget bud = budget(m_max, r, spec);
  BivariateSeries out(m_max);
  const int outer_max = m_max - bud.min_total;
  if (outer_max < 4) return out;
  std::vector<StaircaseShape> holes;
  for_each_staircase(std::min(bud.max_single, outer_max), [&](const StaircaseShape& s) {
    if (!bud.unit_only || s.half_perimeter() == 2) holes.push_back(s);
  });

  for_each_staircase(outer_max, [&](const StaircaseShape& o) {
    const int L = o.half_perimeter();
    const int room = m_max - L;
    if (room < bud.min_total) return;
    const CellSets outer = cell_sets(o, 0, 0);
    struct Placed { CellSets cs; int hp, area; };
    std::vector<Placed> placed;
    for (const auto& h : holes) {
      if (h.half_perimeter() > room) continue;
      for (int dx = 0; dx + h.width() <= o.width(); ++dx)
        for (int dy = 0; dy + h.height() <= o.height(); ++dy) {
          CellSets hc = cell_sets(h, dx, dy);
          if (!subset(hc.cells, outer.cells) || !disjoint(hc.boundary, outer.boundary)) continue;
          placed.push_back({std::move(hc), h.half_perimeter(), h.area()});
        }
    }
    if (r == 1) {
      for (const auto& p : placed)
        if (total_ok(spec, p.hp)) out.add(L + p.hp, o.area() - p.area, 1);
      return;
    }
    for (size_t i = 0; i < placed.size(); ++i)
      for (size_t j = i + 1; j < placed.size(); ++j) {
        const int tot = placed[i].hp + placed[j].hp;
        if (tot > room || !total_ok(spec, tot)) continue;
        if (!disjoint(placed[i].cs.cells, placed[j].cs.cells) ||
            !disjoint(placed[i].cs.boundary, placed[j].cs.boundary))
          continue;
        out.add(L + tot, o.area() - placed[i].area - placed[j].area, 1);
      }
  });
  out.trim();
  return out;
}

// ---- self-avoiding polygons

namespace {

struct Sap {
  int perimeter = 0;
  std::set<Pt> cells;
  std::set<Pt> vertices;
  int w = 0, h = 0;  // bounding box of vertices after normalization
};

// Canonical form: edges (x, y, horizontal?) translated so min vertex coords are 0, sorted.
std::vector<int> canonical_edges(const std::vector<Pt>& loop) {
  int mx = 1 << 20, my = 1 << 20;
  for (auto& [x, y] : loop) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  std::vector<int> e;
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    Pt a = loop[i], b = loop[(i + 1) % n];
    if (b < a) std::swap(a, b);
    const int horiz = a.second == b.second ? 1 : 0;
    e.push_back(((a.first - mx) * 64 + (a.second - my)) * 2 + horiz);
  }
  std::sort(e.begin(), e.end());
  return e;
}

Sap sap_from_loop(const std::vector<Pt>& loop) {
  Sap s;
  s.perimeter = static_cast<int>(loop.size());
  int mx = 1 << 20, my = 1 << 20;
  for (auto& [x, y] : loop) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  std::set<std::pair<int, int>> vedges;  // vertical edges by (x, lower y)
  for (size_t i = 0; i < loop.size(); ++i) {
    Pt a = loop[i], b = loop[(i + 1) % loop.size()];
    a = {a.first - mx, a.second - my};
    b = {b.first - mx, b.second - my};
    s.vertices.insert(a);
    s.w = std::max(s.w, a.first);
    s.h = std::max(s.h, a.second);
    if (a.first == b.first) vedges.insert({a.first, std::min(a.second, b.second)});
  }
  // Cell (x, y) is inside iff an odd number of vertical edges lie at x' <= x in row y.
  for (int y = 0; y < s.h; ++y) {
    int crossings = 0;
    for (int x = 0; x < s.w; ++x) {
      if (vedges.count({x, y})) ++crossings;
      if (crossings % 2) s.cells.insert({x, y});
    }
  }
  return s;
}

// All polygons with perimeter <= pmax, each exactly once up to translation.
std::vector<Sap> enumerate_saps(int pmax) {
  std::vector<Sap> out;
  std::set<std::vector<int>> seen;
  const int R = pmax / 2 + 2;
  const int W = 2 * R + 1;
  std::vector<char> used(W * (R + 2), 0);
  auto idx = [&](int x, int y) { return (y) * W + (x + R); };
  std::vector<Pt> path = {{0, 0}};
  used[idx(0, 0)] = 1;
  const int dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};
  std::function<void()> rec = [&]() {
    auto [x, y] = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    for (int d = 0; d < 4; ++d) {
      if (len == 0 && d != 0) continue;  // root leaves to the right
      const int nx = x + dx[d], ny = y + dy[d];
      if (ny < 0 || (ny == 0 && nx < 0)) continue;  // root is the lowest-left vertex
      if (nx == 0 && ny == 0) {
        if (len + 1 >= 4) {
          auto key = canonical_edges(path);
          if (seen.insert(key).second) out.push_back(sap_from_loop(path));
        }
        continue;
      }
      if (used[idx(nx, ny)]) continue;
      if (len + 1 + std::abs(nx) + std::abs(ny) > pmax) continue;
      used[idx(nx, ny)] = 1;
      path.push_back({nx, ny});
      rec();
      path.pop_back();
      used[idx(nx, ny)] = 0;
    }
  };
  rec();
  return out;
}

}  // namespace

IntegerSeries oracle_punctured_sap(int perimeter_max, int r) {
  if (r != 0 && r != 1) throw std::invalid_argument("punctured SAP oracle supports r in {0,1}");
  if (perimeter_max > 24)
    throw std::invalid_argument("perimeter_max " + std::to_string(perimeter_max) +
                                " is beyond exhaustive search; use perimeter_max <= 24");
  if (perimeter_max < 4) throw std::invalid_argument("perimeter_max must be >= 4");
  IntegerSeries out(perimeter_max / 2);
  if (r == 0) {
    for (const auto& s : enumerate_saps(perimeter_max)) out[s.perimeter / 2] += 1;
    return out;
  }
  const auto polys = enumerate_saps(perimeter_max - 4);
  for (const auto& o : polys) {
    for (const auto& h : polys) {
      if (o.perimeter + h.perimeter > perimeter_max) continue;
      for (int ox = 0; ox + h.w <= o.w; ++ox)
        for (int oy = 0; oy + h.h <= o.h; ++oy) {
          bool ok = true;
          for (const auto& [cx, cy] : h.cells)
            if (!o.cells.count({cx + ox, cy + oy})) { ok = false; break; }
          if (!ok) continue;
          for (const auto& [vx, vy] : h.vertices)
            if (o.vertices.count({vx + ox, vy + oy})) { ok = false; break; }
          if (ok) out[(o.perimeter + h.perimeter) / 2] += 1;
        }
    }
  }
  return out;
}

}  // namespace punct

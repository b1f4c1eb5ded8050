#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "punct/series.hpp"

namespace punct {

// Column i spans rows [floors[i], ceilings[i]); both sequences non-decreasing,
// adjacent columns share at least one edge.
struct StaircaseShape {
  std::vector<int> floors;
  std::vector<int> ceilings;

  int width() const { return static_cast<int>(floors.size()); }
  int height() const { return ceilings.back() - floors.front(); }
  int half_perimeter() const { return width() + height(); }
  int area() const;
  bool valid() const;
};

// Visits every staircase polygon (first floor at 0) with half-perimeter in
// [2, hp_max], in depth-first column order.
void for_each_staircase(int hp_max, const std::function<void(const StaircaseShape&)>& visit);

// Counts by half-perimeter and area, via a column-by-column counting recursion.
BivariateSeries oracle_staircase(int m_max);

// Counts by (width, height) from explicit enumeration.
std::map<std::pair<int, int>, Int> staircase_box_counts(int hp_max);

enum class PunctureKind { minimal, fixed_total, arbitrary };

struct PunctureSpec {
  PunctureKind kind = PunctureKind::minimal;
  int s = 0;  // total hole half-perimeter for fixed_total

  static PunctureSpec minimal() { return {PunctureKind::minimal, 0}; }
  static PunctureSpec fixed_total(int s) { return {PunctureKind::fixed_total, s}; }
  static PunctureSpec arbitrary() { return {PunctureKind::arbitrary, 0}; }
};

// Staircase polygons with r staircase holes, counted by total half-perimeter
// and net area. Holes lie strictly inside and share no vertex with the outer
// boundary or with each other.
BivariateSeries oracle_punctured_staircase(int m_max, int r, PunctureSpec spec);

// Same count, but every placement is checked cell by cell against explicit
// cell and boundary-vertex sets. Much slower; used to cross-check.
BivariateSeries oracle_punctured_staircase_literal(int m_max, int r, PunctureSpec spec);

// Square-lattice self-avoiding polygons up to translation with r in {0,1}
// holes (also self-avoiding polygons), counted by total half-perimeter.
IntegerSeries oracle_punctured_sap(int perimeter_max, int r);

}  // namespace punct

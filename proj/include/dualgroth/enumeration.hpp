#pragma once

#include <span>
#include <vector>

#include "dualgroth/filling.hpp"
#include "dualgroth/shapes.hpp"

namespace dualgroth {

// Precomputed neighbor structure for filling a shape cell by cell in
// row-major order.
struct ShapeScan {
  std::vector<Cell> cells;      // row-major
  std::vector<int> left;        // index of (r,c-1), or -1
  std::vector<int> above;       // index of (r-1,c), or -1
  std::vector<int> col_below;   // number of cells strictly below in the same column
  explicit ShapeScan(const SkewShape& shape);
};

// Visits every filling of the shape with entries in 1..max_entry whose rows
// weakly increase, with columns weakly increasing (strict_cols=false, rpps)
// or strictly increasing (strict_cols=true, semistandard tableaux). Fillings
// are produced in lexicographic order of the row-major entry sequence. The
// callback receives the cells and their values, index-aligned.
template <class F>
void for_each_filling_values(const ShapeScan& scan, int max_entry, bool strict_cols, F&& visit) {
  const int n = static_cast<int>(scan.cells.size());
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  // Iterative DFS: position k holds the value being tried at cell k.
  int k = 0;
  if (n == 0) {
    visit(std::span<const Cell>(scan.cells), std::span<const int>(vals));
    return;
  }
  auto min_value = [&](int idx) {
    int lo = 1;
    if (scan.left[static_cast<std::size_t>(idx)] >= 0) {
      lo = std::max(lo, vals[static_cast<std::size_t>(scan.left[static_cast<std::size_t>(idx)])]);
    }
    if (scan.above[static_cast<std::size_t>(idx)] >= 0) {
      int up = vals[static_cast<std::size_t>(scan.above[static_cast<std::size_t>(idx)])];
      lo = std::max(lo, strict_cols ? up + 1 : up);
    }
    return lo;
  };
  auto max_value = [&](int idx) {
    // With strict columns every cell below forces a strictly larger entry.
    return strict_cols ? max_entry - scan.col_below[static_cast<std::size_t>(idx)] : max_entry;
  };
  while (k >= 0) {
    std::size_t uk = static_cast<std::size_t>(k);
    int v = vals[uk] == 0 ? min_value(k) : vals[uk] + 1;
    if (v > max_value(k)) {
      vals[uk] = 0;
      --k;
      continue;
    }
    vals[uk] = v;
    if (k + 1 == n) {
      visit(std::span<const Cell>(scan.cells), std::span<const int>(vals));
    } else {
      ++k;
    }
  }
}

// Number of fillings, for tests and counting oracles.
long long count_rpps(const SkewShape& shape, int max_entry);
long long count_ssyts(const SkewShape& shape, int max_entry);

// Materialized enumerations in the documented order.
std::vector<Filling> enumerate_rpps(const SkewShape& shape, int max_entry);
std::vector<Filling> enumerate_ssyts(const SkewShape& shape, int max_entry);

}  // namespace dualgroth

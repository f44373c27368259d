#include "dualgroth/gseries.hpp"

#include <algorithm>
#include <numeric>

#include "dualgroth/enumeration.hpp"

namespace dualgroth {

namespace {

// Scratch for computing ceq and ircont of a filling given as value spans
// aligned with a fixed ShapeScan.
struct StatsScan {
  ShapeScan scan;
  std::vector<int> below;      // index of (r+1,c), or -1
  std::vector<int> col_order;  // cell indices sorted by (col,row)

  explicit StatsScan(const SkewShape& shape) : scan(shape) {
    below.assign(scan.cells.size(), -1);
    for (std::size_t k = 0; k < scan.cells.size(); ++k) {
      if (scan.above[k] >= 0) below[static_cast<std::size_t>(scan.above[k])] = static_cast<int>(k);
    }
    col_order.resize(scan.cells.size());
    std::iota(col_order.begin(), col_order.end(), 0);
    std::sort(col_order.begin(), col_order.end(), [&](int a, int b) {
      const Cell& ca = scan.cells[static_cast<std::size_t>(a)];
      const Cell& cb = scan.cells[static_cast<std::size_t>(b)];
      return std::pair(ca.col, ca.row) < std::pair(cb.col, cb.row);
    });
  }

  WeakComposition ceq_of(std::span<const int> vals) const {
    std::vector<int> counts;
    for (std::size_t k = 0; k < scan.cells.size(); ++k) {
      int b = below[k];
      if (b >= 0 && vals[k] == vals[static_cast<std::size_t>(b)]) {
        int row = scan.cells[k].row;
        if (static_cast<int>(counts.size()) < row) counts.resize(static_cast<std::size_t>(row), 0);
        ++counts[static_cast<std::size_t>(row) - 1];
      }
    }
    return WeakComposition(std::move(counts));
  }

  WeakComposition ircont_of(std::span<const int> vals) const {
    std::vector<int> counts;
    int cur_col = -1;
    int prev_val = 0;
    for (int k : col_order) {
      const Cell& c = scan.cells[static_cast<std::size_t>(k)];
      int v = vals[static_cast<std::size_t>(k)];
      if (c.col != cur_col || v != prev_val) {
        if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v) - 1];
      }
      cur_col = c.col;
      prev_val = v;
    }
    return WeakComposition(std::move(counts));
  }
};

}  // namespace

SparsePoly gtilde(const SkewShape& shape, int nx) {
  StatsScan st(shape);
  SparsePoly acc;
  for_each_filling_values(st.scan, nx, /*strict_cols=*/false,
                          [&](std::span<const Cell>, std::span<const int> vals) {
                            acc.add_term({st.ircont_of(vals), st.ceq_of(vals)}, 1);
                          });
  return acc;
}

SparsePoly g_poly(const SkewShape& shape, int nx) { return gtilde(shape, nx).specialize_t(1); }

SparsePoly schur_poly(const SkewShape& shape, int nx) {
  ShapeScan scan(shape);
  SparsePoly acc;
  for_each_filling_values(scan, nx, /*strict_cols=*/true,
                          [&](std::span<const Cell>, std::span<const int> vals) {
                            std::vector<int> counts;
                            for (int v : vals) {
                              if (static_cast<int>(counts.size()) < v) {
                                counts.resize(static_cast<std::size_t>(v), 0);
                              }
                              ++counts[static_cast<std::size_t>(v) - 1];
                            }
                            acc.add_term({WeakComposition(std::move(counts)), {}}, 1);
                          });
  return acc;
}

bool check_symmetry(const SkewShape& shape, int nx) {
  return gtilde(shape, nx).is_symmetric_x(nx);
}

}  // namespace dualgroth

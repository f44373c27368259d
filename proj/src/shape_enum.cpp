#include "dualgroth/shape_enum.hpp"

#include <algorithm>

#include "dualgroth/errors.hpp"

namespace dualgroth {

namespace {

struct RowSpan {
  int lo = 0;  // first column
  int hi = 0;  // last column
  int width() const { return hi - lo + 1; }
};

void emit(const std::vector<RowSpan>& rows, std::vector<SkewShape>& out) {
  std::vector<int> lam, mu;
  lam.reserve(rows.size());
  mu.reserve(rows.size());
  for (const RowSpan& r : rows) {
    lam.push_back(r.hi);
    mu.push_back(r.lo - 1);
  }
  out.emplace_back(Partition(std::move(lam)), Partition(std::move(mu)));
}

void extend(std::vector<RowSpan>& rows, int budget, bool connected_only,
            std::vector<SkewShape>& out) {
  const RowSpan& prev = rows.back();
  if (prev.lo == 1) emit(rows, out);
  if (budget <= 0) return;
  int elo_min = connected_only ? prev.lo : prev.lo - 1;
  for (int lo = 1; lo <= prev.lo; ++lo) {
    for (int hi = std::max(lo, elo_min); hi <= prev.hi; ++hi) {
      if (hi - lo + 1 > budget) continue;
      rows.push_back({lo, hi});
      extend(rows, budget - (hi - lo + 1), connected_only, out);
      rows.pop_back();
    }
  }
}

}  // namespace

std::vector<SkewShape> all_skew_shapes(int max_cells, bool connected_only, int max_width) {
  std::vector<SkewShape> out;
  if (max_cells < 1) return out;
  int width_cap = max_width > 0 ? std::min(max_width, max_cells) : max_cells;
  std::vector<RowSpan> rows;
  for (int lo = 1; lo <= width_cap; ++lo) {
    for (int hi = lo; hi <= width_cap; ++hi) {
      if (hi - lo + 1 > max_cells) continue;
      rows.assign(1, {lo, hi});
      extend(rows, max_cells - (hi - lo + 1), connected_only, out);
    }
  }
  return out;
}

const SkewShape& pick_shape(std::mt19937_64& rng, const std::vector<SkewShape>& shapes) {
  DG_CHECK(!shapes.empty());
  std::uniform_int_distribution<std::size_t> dist(0, shapes.size() - 1);
  return shapes[dist(rng)];
}

Table12 random_benign_table(std::mt19937_64& rng, const SkewShape& shape) {
  std::vector<Table12::Column> cols;
  int last_sep = shape.num_rows() + 1;  // no bound yet
  for (int c = 1; c <= shape.num_cols(); ++c) {
    int top = 0, bot = 0;
    for (int r = 1; r <= shape.num_rows(); ++r) {
      if (shape.contains(r, c)) {
        if (top == 0) top = r;
        bot = r;
      }
    }
    if (top == 0) continue;  // empty column
    // Options: 1-pure, 2-pure, or mixed with a separator row that keeps the
    // seplist weakly decreasing.
    int sep_hi = std::min(bot, last_sep);
    int mixed_options = std::max(0, sep_hi - top);  // sep in [top+1, sep_hi]
    std::uniform_int_distribution<int> dist(0, 1 + mixed_options);
    int pick = dist(rng);
    Table12::Column col{c, top, bot - top + 1, 0};
    if (pick == 0) {
      col.ones = col.height;  // 1-pure
    } else if (pick == 1) {
      col.ones = 0;  // 2-pure
    } else {
      int sep = top + pick - 1;  // pick=2 -> sep=top+1, ...
      col.ones = sep - top;
      last_sep = sep;
    }
    cols.push_back(col);
  }
  return Table12::from_columns(std::move(cols));
}

Filling random_rpp(std::mt19937_64& rng, const SkewShape& shape, int max_entry) {
  DG_CHECK(max_entry >= 1 || shape.empty());
  std::vector<std::pair<Cell, int>> items;
  for (const Cell& cell : shape.cell_list()) {
    int lo = 1;
    for (const auto& [other, value] : items) {
      if (other == Cell{cell.row, cell.col - 1} || other == Cell{cell.row - 1, cell.col}) {
        lo = std::max(lo, value);
      }
    }
    std::uniform_int_distribution<int> dist(lo, std::max(lo, max_entry));
    items.emplace_back(cell, dist(rng));
  }
  return Filling::from_pairs(std::move(items));
}

}  // namespace dualgroth

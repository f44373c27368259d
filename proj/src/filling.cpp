#include "dualgroth/filling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dualgroth/errors.hpp"

namespace dualgroth {

Filling Filling::from_pairs(std::vector<std::pair<Cell, int>> items) {
  std::sort(items.begin(), items.end());
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& [cell, value] = items[k];
    if (cell.row < 1 || cell.col < 1) throw InvalidArgument("cells must have positive coordinates");
    if (value < 1) throw InvalidArgument("filling entries must be positive");
    if (k > 0 && items[k - 1].first == cell) throw InvalidArgument("duplicate cell in filling");
  }
  Filling f;
  f.items_ = std::move(items);
  return f;
}

Filling Filling::on_shape(const SkewShape& shape, std::span<const int> row_major) {
  std::vector<Cell> cells = shape.cell_list();
  if (cells.size() != row_major.size()) {
    throw InvalidArgument("entry count does not match the number of cells");
  }
  std::vector<std::pair<Cell, int>> items;
  items.reserve(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) items.emplace_back(cells[k], row_major[k]);
  return from_pairs(std::move(items));
}

std::optional<int> Filling::at(Cell c) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), c,
                             [](const auto& item, const Cell& key) { return item.first < key; });
  if (it == items_.end() || it->first != c) return std::nullopt;
  return it->second;
}

int Filling::operator[](Cell c) const {
  auto v = at(c);
  DG_CHECK(v.has_value());
  return *v;
}

CellSet Filling::domain() const {
  std::vector<Cell> cells;
  cells.reserve(items_.size());
  for (const auto& [cell, value] : items_) cells.push_back(cell);
  return CellSet(std::move(cells));
}

std::string Filling::to_string() const {
  if (items_.empty()) return "(empty)";
  int rlo = items_.front().first.row, rhi = items_.back().first.row;
  int clo = items_.front().first.col, chi = 1;
  for (const auto& [cell, value] : items_) {
    clo = std::min(clo, cell.col);
    chi = std::max(chi, cell.col);
  }
  std::ostringstream os;
  for (int r = rlo; r <= rhi; ++r) {
    for (int c = clo; c <= chi; ++c) {
      auto v = at({r, c});
      if (c > clo) os << ' ';
      if (v)
        os << *v;
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Convexity of the sorted row-major cell list, without materializing a
// CellSet: rows are intervals with weakly decreasing endpoints, and rows
// separated by an empty row share no column.
bool convex_items(const std::vector<std::pair<Cell, int>>& items) {
  std::size_t k = 0;
  int prev_row = 0, prev_lo = 0, prev_hi = 0;
  bool have_prev = false;
  while (k < items.size()) {
    int row = items[k].first.row;
    int lo = items[k].first.col;
    int hi = lo;
    ++k;
    while (k < items.size() && items[k].first.row == row) {
      if (items[k].first.col != hi + 1) return false;
      hi = items[k].first.col;
      ++k;
    }
    if (have_prev) {
      if (lo > prev_lo || hi > prev_hi) return false;
      if (row > prev_row + 1 && prev_lo <= hi) return false;
    }
    prev_row = row;
    prev_lo = lo;
    prev_hi = hi;
    have_prev = true;
  }
  return true;
}

}  // namespace

bool domain_is_convex(const Filling& f) { return convex_items(f.items()); }

namespace {

void require_convex(const Filling& f) {
  if (!domain_is_convex(f)) throw NonConvexDomain("filling domain is not convex");
}

// Single pass over the row-major items: row neighbors are adjacent in the
// list (rows of a convex domain are contiguous), and the cells directly
// below are matched by walking the next row's segment in parallel.
bool monotone(const Filling& f, bool strict_cols) {
  const auto& items = f.items();
  const std::size_t n = items.size();
  std::size_t row_start = 0;
  while (row_start < n) {
    int row = items[row_start].first.row;
    std::size_t row_end = row_start + 1;
    while (row_end < n && items[row_end].first.row == row) {
      if (items[row_end].first.col == items[row_end - 1].first.col + 1 &&
          items[row_end].second < items[row_end - 1].second) {
        return false;
      }
      ++row_end;
    }
    if (row_end < n && items[row_end].first.row == row + 1) {
      std::size_t p = row_start, q = row_end;
      while (p < row_end && q < n && items[q].first.row == row + 1) {
        int ca = items[p].first.col, cb = items[q].first.col;
        if (ca < cb) {
          ++p;
        } else if (cb < ca) {
          ++q;
        } else {
          if (strict_cols ? items[q].second <= items[p].second
                          : items[q].second < items[p].second) {
            return false;
          }
          ++p;
          ++q;
        }
      }
    }
    row_start = row_end;
  }
  return true;
}

}  // namespace

bool is_rpp(const Filling& f) {
  require_convex(f);
  return monotone(f, /*strict_cols=*/false);
}

bool is_ssyt(const Filling& f) {
  require_convex(f);
  return monotone(f, /*strict_cols=*/true);
}

WeakComposition cont(const Filling& f) {
  std::vector<int> counts;
  for (const auto& [cell, value] : f.items()) {
    if (static_cast<int>(counts.size()) < value) counts.resize(static_cast<std::size_t>(value), 0);
    ++counts[static_cast<std::size_t>(value) - 1];
  }
  return WeakComposition(std::move(counts));
}

WeakComposition ircont(const Filling& f) {
  std::set<std::pair<int, int>> col_values;
  for (const auto& [cell, value] : f.items()) col_values.emplace(cell.col, value);
  std::vector<int> counts;
  for (const auto& [col, value] : col_values) {
    if (static_cast<int>(counts.size()) < value) counts.resize(static_cast<std::size_t>(value), 0);
    ++counts[static_cast<std::size_t>(value) - 1];
  }
  return WeakComposition(std::move(counts));
}

CellSet redundant_cells(const Filling& f) {
  std::vector<Cell> out;
  for (const auto& [cell, value] : f.items()) {
    if (auto below = f.at({cell.row + 1, cell.col}); below && *below == value) {
      out.push_back(cell);
    }
  }
  return CellSet(std::move(out));
}

WeakComposition ceq(const Filling& f) {
  std::vector<int> counts;
  for (const Cell& cell : redundant_cells(f)) {
    if (static_cast<int>(counts.size()) < cell.row) {
      counts.resize(static_cast<std::size_t>(cell.row), 0);
    }
    ++counts[static_cast<std::size_t>(cell.row) - 1];
  }
  return WeakComposition(std::move(counts));
}

}  // namespace dualgroth

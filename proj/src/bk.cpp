#include "dualgroth/bk.hpp"

#include <algorithm>
#include <set>

#include "dualgroth/errors.hpp"

namespace dualgroth {

Table12 normalize(const Table12& t, Strategy strategy, std::uint64_t seed) {
  if (!t.is_benign()) throw NotBenign("normalization requires a benign table");
  return normal_form(DescentResolution{}, t, strategy, seed);
}

bool check_local_confluence(const Table12& t) {
  if (!t.is_benign()) throw NotBenign("local confluence check requires a benign table");
  return locally_confluent_at(DescentResolution{}, t);
}

Table12 bk12(const Table12& t) {
  if (!t.is_rpp12()) throw NotAnRpp("bk12 expects a descent-free 12-table");
  return normalize(flip(t));
}

Filling bk_general(const Filling& t, int i) {
  if (i < 1) throw InvalidArgument("variable index must be positive");
  bool rpp = false;
  try {
    rpp = is_rpp(t);
  } catch (const NonConvexDomain&) {
    rpp = false;
  }
  if (!rpp) throw NotAnRpp("bk_general expects a reverse plane partition");

  std::vector<std::pair<Cell, int>> active, rest;
  for (const auto& [cell, value] : t.items()) {
    if (value == i || value == i + 1) {
      active.emplace_back(cell, value - i + 1);
    } else {
      rest.emplace_back(cell, value);
    }
  }
  Table12 sub = Table12::from_filling(Filling::from_pairs(std::move(active)));
  Table12 image = bk12(sub);

  std::vector<std::pair<Cell, int>> merged = std::move(rest);
  for (const Table12::Column& c : image.columns()) {
    for (int r = 0; r < c.height; ++r) {
      merged.emplace_back(Cell{c.top + r, c.col}, (r < c.ones ? 1 : 2) + i - 1);
    }
  }
  Filling out = Filling::from_pairs(std::move(merged));
  DG_CHECK(is_rpp(out));
  return out;
}

Filling classical_bk(const Filling& t, int i) {
  if (i < 1) throw InvalidArgument("variable index must be positive");
  bool ssyt = false;
  try {
    ssyt = is_ssyt(t);
  } catch (const NonConvexDomain&) {
    ssyt = false;
  }
  if (!ssyt) throw NotAnSsyt("classical_bk expects a semistandard tableau");

  // Columns holding both an i and an i+1 are ignored.
  std::set<int> ignored;
  std::set<std::pair<int, int>> col_values;
  for (const auto& [cell, value] : t.items()) {
    if (value == i || value == i + 1) col_values.emplace(cell.col, value);
  }
  for (const auto& [col, value] : col_values) {
    if (value == i && col_values.count({col, i + 1}) > 0) ignored.insert(col);
  }

  std::vector<std::pair<Cell, int>> items = t.items();
  std::size_t k = 0;
  while (k < items.size()) {
    int row = items[k].first.row;
    // Free cells of this row holding i or i+1, in column order.
    std::vector<std::size_t> free_cells;
    int count_i = 0, count_i1 = 0;
    while (k < items.size() && items[k].first.row == row) {
      const auto& [cell, value] = items[k];
      if ((value == i || value == i + 1) && ignored.count(cell.col) == 0) {
        free_cells.push_back(k);
        (value == i ? count_i : count_i1)++;
      }
      ++k;
    }
    // r i's followed by s (i+1)'s become s i's followed by r (i+1)'s.
    for (std::size_t p = 0; p < free_cells.size(); ++p) {
      items[free_cells[p]].second = p < static_cast<std::size_t>(count_i1) ? i : i + 1;
    }
  }
  Filling out = Filling::from_pairs(std::move(items));
  DG_CHECK(is_ssyt(out));
  return out;
}

}  // namespace dualgroth

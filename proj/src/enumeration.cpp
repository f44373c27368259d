#include "dualgroth/enumeration.hpp"

#include <algorithm>
#include <map>

namespace dualgroth {

ShapeScan::ShapeScan(const SkewShape& shape) : cells(shape.cell_list()) {
  const std::size_t n = cells.size();
  left.assign(n, -1);
  above.assign(n, -1);
  col_below.assign(n, 0);
  std::map<Cell, int> index;
  for (std::size_t k = 0; k < n; ++k) index[cells[k]] = static_cast<int>(k);
  std::map<int, int> col_height;
  for (const Cell& c : cells) ++col_height[c.col];
  std::map<int, int> col_seen;
  for (std::size_t k = 0; k < n; ++k) {
    const Cell& c = cells[k];
    if (auto it = index.find({c.row, c.col - 1}); it != index.end()) left[k] = it->second;
    if (auto it = index.find({c.row - 1, c.col}); it != index.end()) above[k] = it->second;
    int seen = ++col_seen[c.col];
    col_below[k] = col_height[c.col] - seen;
  }
}

namespace {

template <bool Strict>
long long count_fillings(const SkewShape& shape, int max_entry) {
  ShapeScan scan(shape);
  long long n = 0;
  for_each_filling_values(scan, max_entry, Strict,
                          [&](std::span<const Cell>, std::span<const int>) { ++n; });
  return n;
}

template <bool Strict>
std::vector<Filling> collect_fillings(const SkewShape& shape, int max_entry) {
  ShapeScan scan(shape);
  std::vector<Filling> out;
  for_each_filling_values(scan, max_entry, Strict,
                          [&](std::span<const Cell> cells, std::span<const int> vals) {
                            std::vector<std::pair<Cell, int>> items;
                            items.reserve(cells.size());
                            for (std::size_t k = 0; k < cells.size(); ++k) {
                              items.emplace_back(cells[k], vals[k]);
                            }
                            out.push_back(Filling::from_pairs(std::move(items)));
                          });
  return out;
}

}  // namespace

long long count_rpps(const SkewShape& shape, int max_entry) {
  return count_fillings<false>(shape, max_entry);
}

long long count_ssyts(const SkewShape& shape, int max_entry) {
  return count_fillings<true>(shape, max_entry);
}

std::vector<Filling> enumerate_rpps(const SkewShape& shape, int max_entry) {
  return collect_fillings<false>(shape, max_entry);
}

std::vector<Filling> enumerate_ssyts(const SkewShape& shape, int max_entry) {
  return collect_fillings<true>(shape, max_entry);
}

}  // namespace dualgroth

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualgroth/shapes.hpp"
#include "dualgroth/weak_composition.hpp"

namespace dualgroth {

// Map from a finite cell set to positive integers. Immutable value type;
// cells are kept sorted row-major.
class Filling {
 public:
  Filling() = default;

  // Throws InvalidArgument on duplicate cells or nonpositive entries.
  static Filling from_pairs(std::vector<std::pair<Cell, int>> items);
  // Entries listed row-major over the cells of the shape.
  static Filling on_shape(const SkewShape& shape, std::span<const int> row_major);

  std::optional<int> at(Cell c) const;
  // Entry at a cell known to be present.
  int operator[](Cell c) const;
  bool has(Cell c) const { return at(c).has_value(); }

  const std::vector<std::pair<Cell, int>>& items() const { return items_; }
  CellSet domain() const;
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const Filling&, const Filling&) = default;

  // Multi-line grid using '.' for absent cells inside the bounding box.
  std::string to_string() const;

 private:
  std::vector<std::pair<Cell, int>> items_;
};

// True iff the domain of f is convex.
bool domain_is_convex(const Filling& f);

// Weakly increasing along rows and down columns. Requires a convex domain;
// throws NonConvexDomain otherwise.
bool is_rpp(const Filling& f);
// As is_rpp but strictly increasing down columns.
bool is_ssyt(const Filling& f);

// cont(T)_i = number of entries equal to i.
WeakComposition cont(const Filling& f);
// ircont(T)_i = number of columns containing an entry equal to i.
WeakComposition ircont(const Filling& f);
// Cells whose entry equals the entry of the cell directly below them.
CellSet redundant_cells(const Filling& f);
// ceq(T)_i = number of redundant cells in row i.
WeakComposition ceq(const Filling& f);

}  // namespace dualgroth

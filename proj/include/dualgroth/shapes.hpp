#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dualgroth/errors.hpp"

namespace dualgroth {

// Box in matrix convention: (1,1) is the top-left corner, row grows
// downwards, column grows to the right.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Half-open integer interval [lo, hi).
struct Interval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo >= hi; }
  int length() const { return empty() ? 0 : hi - lo; }
  bool contains(int x) const { return lo <= x && x < hi; }
  // True iff *this is a subset of other (empty intervals are subsets of everything).
  bool subset_of(const Interval& other) const {
    return empty() || (!other.empty() && other.lo <= lo && hi <= other.hi);
  }
  bool intersects(const Interval& other) const {
    return !empty() && !other.empty() && lo < other.hi && other.lo < hi;
  }
  friend auto operator<=>(const Interval&, const Interval&) = default;
  // Printed closed, "[3,4]", or "{}" when empty.
  std::string to_string() const;
};

// Finite set of cells, kept sorted row-major.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::vector<Cell> cells);

  bool contains(Cell c) const;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }
  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<Cell> cells_;
};

// True iff whenever (i,j) and (i'',j'') lie in z and i<=i'<=i'', j<=j'<=j'',
// the cell (i',j') lies in z as well.
bool is_convex(const CellSet& z);

// Weakly decreasing list of positive integers, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws NotAPartition

  // 1-based; rows beyond the stored length have part 0.
  int part(int i) const;
  int num_rows() const { return static_cast<int>(parts_.size()); }
  long long sum() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  // Componentwise mu_i <= this_i.
  bool contains(const Partition& mu) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

  // "7,7,7,4,4"; "0" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// Skew shape lambda/mu with mu contained in lambda. Values are immutable
// after construction; the cell set is the diagram {(i,j) : mu_i < j <= lambda_i}.
// Equality compares diagrams, not the (lambda, mu) pair: pairs differing only
// in how they pad empty rows describe the same shape.
class SkewShape {
 public:
  SkewShape() = default;  // empty shape
  SkewShape(Partition lambda, Partition mu);  // throws NotContained

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }

  int num_rows() const { return lambda_.num_rows(); }
  // Number of the last nonempty column, i.e. lambda_1.
  int num_cols() const { return lambda_.part(1); }
  long long num_cells() const;
  bool empty() const { return num_cells() == 0; }
  bool contains(int row, int col) const;
  bool contains(Cell c) const { return contains(c.row, c.col); }

  // Columns occupied in row i, as the half-open interval [mu_i+1, lambda_i+1).
  Interval row_cells(int i) const;
  // Columns j such that both (i,j) and (i+1,j) are cells of the shape:
  // [mu_i+1, lambda_{i+1}+1). Empty when mu_i >= lambda_{i+1}.
  Interval support(int i) const;

  CellSet cells() const;
  std::vector<Cell> cell_list() const;  // row-major

  bool operator==(const SkewShape& other) const;
  bool operator!=(const SkewShape& other) const { return !(*this == other); }

  // "7,7,7,4,4/5,3,2"; mu omitted when empty; "0" for the empty shape.
  std::string to_string() const;

 private:
  Partition lambda_;
  Partition mu_;
};

// Parses "l1,l2,.../m1,m2,..."; the "/mu" part is optional.
// Throws ParseError on bad syntax, NotAPartition if a part list is not
// weakly decreasing, NotContained if mu is not contained in lambda.
SkewShape parse_skew(const std::string& text);

// A connected component re-emitted as a canonical shape, together with the
// translation that carries the canonical shape back into the original:
// original cell = (row + row_offset, col + col_offset).
struct PlacedComponent {
  SkewShape shape;
  int row_offset = 0;
  int col_offset = 0;
};

// Edge-adjacency components, ordered by smallest original column index,
// each re-emitted with rows and columns renumbered from 1.
std::vector<SkewShape> connected_components(const SkewShape& shape);
std::vector<PlacedComponent> connected_components_placed(const SkewShape& shape);
bool is_connected(const SkewShape& shape);
// True iff every column 1..lambda_1 contains at least one cell.
bool has_no_empty_columns(const SkewShape& shape);

// Keeps the cells with column in [a,b), then renumbers columns so the
// smallest surviving column becomes 1 and drops empty leading/trailing rows.
// Requires 1 <= a < b; throws EmptyRestriction when no cell survives.
SkewShape restrict_columns(const SkewShape& shape, int a, int b);

// Keeps the cells with column in [a,b) and shifts columns so that column a
// becomes column 1, but preserves row indices (empty rows are padded).
// Used where row indices must stay aligned with the original shape.
SkewShape restrict_columns_keep_rows(const SkewShape& shape, int a, int b);

}  // namespace dualgroth

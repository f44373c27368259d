#pragma once

#include <string>
#include <vector>

#include "dualgroth/filling.hpp"
#include "dualgroth/shapes.hpp"
#include "dualgroth/weak_composition.hpp"

namespace dualgroth {

enum class ColumnClass { Empty, OnePure, TwoPure, Mixed };

// 0 for 2-pure or empty, 1 for mixed, 2 for 1-pure.
int sig(ColumnClass c);

enum class DescentType { M1, TwoM, TwoOne };

// Filling of a finite convex cell set by {1,2} with columns weakly
// increasing downwards, i.e. every column reads (1,...,1,2,...,2) from top
// to bottom. Rows are unconstrained. Stored column by column: a column is
// determined by its span and the number of leading 1s.
class Table12 {
 public:
  struct Column {
    int col = 0;     // column index
    int top = 0;     // topmost occupied row
    int height = 0;  // number of cells
    int ones = 0;    // entries in rows [top, top+ones) are 1, the rest are 2
    friend auto operator<=>(const Column&, const Column&) = default;
  };

  Table12() = default;
  // Validates the {1,2} alphabet, convexity of the domain and the column
  // monotonicity; throws NotATable12 / NonConvexDomain.
  static Table12 from_filling(const Filling& f);
  static Table12 from_columns(std::vector<Column> cols);

  Filling to_filling() const;
  const std::vector<Column>& columns() const { return cols_; }
  bool empty() const { return cols_.empty(); }
  long long num_cells() const;
  // Entry at a cell of the domain (1 or 2); 0 when the cell is absent.
  int entry(int row, int col) const;
  // Column record for the given column index, or nullptr when empty.
  const Column* find_column(int col) const { return find(col); }

  ColumnClass column_class(int col) const;  // Empty for absent columns
  // Row of the topmost 2 in a mixed column; throws NotMixed otherwise.
  int sep(int col) const;
  // sep values of the mixed columns, in increasing column order.
  std::vector<int> seplist() const;
  bool is_benign() const;  // seplist weakly decreasing
  // Columns k such that some row holds a 2 in column k and a 1 in column k+1.
  std::vector<int> descents() const;
  bool is_rpp12() const { return descents().empty(); }
  // Termination potential: sum over columns of (column index) * sig(class).
  long long ell() const;

  WeakComposition ceq() const;
  WeakComposition ircont() const;

  friend auto operator<=>(const Table12&, const Table12&) = default;

  std::string to_string() const;

 private:
  const Column* find(int col) const;
  // Construction bypassing domain validation, for operations that only
  // change the 1/2 split of existing columns.
  static Table12 same_domain(std::vector<Column> cols);
  friend Table12 flip(const Table12&);
  friend Table12 resolve(const Table12&, int);

  std::vector<Column> cols_;  // sorted by column index, heights >= 1
};

// Turns 1-pure columns into 2-pure ones and vice versa; mixed and empty
// columns are unchanged. An involution on 12-tables.
Table12 flip(const Table12& t);

// Classifies the descent k of a benign table: (M1) mixed then 1-pure,
// (2M) 2-pure then mixed, (21) 2-pure then 1-pure. Throws NotADescent when
// k is not a descent and NotBenign when columns k and k+1 are both mixed.
DescentType descent_type(const Table12& t, int k);

// Resolves the descent k: the offending 2s move from column k to column
// k+1 in a way that preserves seplist, ceq and ircont while strictly
// decreasing ell. Errors as in descent_type.
Table12 resolve(const Table12& t, int k);

}  // namespace dualgroth

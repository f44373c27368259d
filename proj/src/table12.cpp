#include "dualgroth/table12.hpp"

#include <algorithm>
#include <sstream>

#include "dualgroth/errors.hpp"

namespace dualgroth {

int sig(ColumnClass c) {
  switch (c) {
    case ColumnClass::Empty:
    case ColumnClass::TwoPure: return 0;
    case ColumnClass::Mixed: return 1;
    case ColumnClass::OnePure: return 2;
  }
  return 0;
}

namespace {

ColumnClass class_of(const Table12::Column& c) {
  if (c.ones == c.height) return ColumnClass::OnePure;
  if (c.ones == 0) return ColumnClass::TwoPure;
  return ColumnClass::Mixed;
}

}  // namespace

Table12 Table12::from_filling(const Filling& f) {
  if (!domain_is_convex(f)) throw NonConvexDomain("12-table domain must be convex");
  std::vector<Column> cols;
  // Group by column; cells of a column in a convex set form an interval.
  std::vector<std::pair<Cell, int>> items = f.items();
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.col, a.first.row) < std::pair(b.first.col, b.first.row);
  });
  for (std::size_t k = 0; k < items.size();) {
    int col = items[k].first.col;
    Column c{col, items[k].first.row, 0, 0};
    bool seen_two = false;
    while (k < items.size() && items[k].first.col == col) {
      const auto& [cell, value] = items[k];
      if (value != 1 && value != 2) throw NotATable12("entries of a 12-table must be 1 or 2");
      DG_CHECK(cell.row == c.top + c.height);  // contiguous column
      if (value == 1) {
        if (seen_two) throw NotATable12("columns of a 12-table must not have a 1 below a 2");
        ++c.ones;
      } else {
        seen_two = true;
      }
      ++c.height;
      ++k;
    }
    cols.push_back(c);
  }
  Table12 t;
  t.cols_ = std::move(cols);
  return t;
}

Table12 Table12::from_columns(std::vector<Column> cols) {
  std::sort(cols.begin(), cols.end(),
            [](const Column& a, const Column& b) { return a.col < b.col; });
  std::vector<std::pair<Cell, int>> items;
  for (const Column& c : cols) {
    if (c.height < 1 || c.ones < 0 || c.ones > c.height || c.top < 1 || c.col < 1) {
      throw NotATable12("malformed column");
    }
    for (int r = 0; r < c.height; ++r) {
      items.emplace_back(Cell{c.top + r, c.col}, r < c.ones ? 1 : 2);
    }
  }
  // Route through the filling constructor to reuse the convexity check.
  return from_filling(Filling::from_pairs(std::move(items)));
}

Table12 Table12::same_domain(std::vector<Column> cols) {
  Table12 t;
  t.cols_ = std::move(cols);
  return t;
}

Filling Table12::to_filling() const {
  std::vector<std::pair<Cell, int>> items;
  for (const Column& c : cols_) {
    for (int r = 0; r < c.height; ++r) {
      items.emplace_back(Cell{c.top + r, c.col}, r < c.ones ? 1 : 2);
    }
  }
  return Filling::from_pairs(std::move(items));
}

long long Table12::num_cells() const {
  long long n = 0;
  for (const Column& c : cols_) n += c.height;
  return n;
}

const Table12::Column* Table12::find(int col) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), col,
                             [](const Column& c, int key) { return c.col < key; });
  if (it == cols_.end() || it->col != col) return nullptr;
  return &*it;
}

int Table12::entry(int row, int col) const {
  const Column* c = find(col);
  if (c == nullptr || row < c->top || row >= c->top + c->height) return 0;
  return row < c->top + c->ones ? 1 : 2;
}

ColumnClass Table12::column_class(int col) const {
  const Column* c = find(col);
  return c == nullptr ? ColumnClass::Empty : class_of(*c);
}

int Table12::sep(int col) const {
  const Column* c = find(col);
  if (c == nullptr || class_of(*c) != ColumnClass::Mixed) {
    throw NotMixed("sep is defined only for mixed columns");
  }
  return c->top + c->ones;
}

std::vector<int> Table12::seplist() const {
  std::vector<int> out;
  for (const Column& c : cols_) {
    if (class_of(c) == ColumnClass::Mixed) out.push_back(c.top + c.ones);
  }
  return out;
}

bool Table12::is_benign() const {
  std::vector<int> s = seplist();
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k - 1] < s[k]) return false;
  }
  return true;
}

std::vector<int> Table12::descents() const {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < cols_.size(); ++k) {
    const Column& a = cols_[k];
    const Column& b = cols_[k + 1];
    if (b.col != a.col + 1) continue;
    // Rows holding a 2 in column a: [a.top+a.ones, a.top+a.height).
    // Rows holding a 1 in column b: [b.top, b.top+b.ones).
    int lo = std::max(a.top + a.ones, b.top);
    int hi = std::min(a.top + a.height, b.top + b.ones);
    if (lo < hi) out.push_back(a.col);
  }
  return out;
}

long long Table12::ell() const {
  long long sum = 0;
  for (const Column& c : cols_) sum += static_cast<long long>(c.col) * sig(class_of(c));
  return sum;
}

WeakComposition Table12::ceq() const {
  std::vector<int> counts;
  auto bump = [&](int row) {
    if (static_cast<int>(counts.size()) < row) counts.resize(static_cast<std::size_t>(row), 0);
    ++counts[static_cast<std::size_t>(row) - 1];
  };
  for (const Column& c : cols_) {
    // Vertically adjacent equal pairs: every row of [top, top+height-1)
    // except the one directly above the topmost 2 of a mixed column.
    for (int r = c.top; r < c.top + c.height - 1; ++r) {
      if (class_of(c) == ColumnClass::Mixed && r == c.top + c.ones - 1) continue;
      bump(r);
    }
  }
  return WeakComposition(std::move(counts));
}

WeakComposition Table12::ircont() const {
  int ones = 0, twos = 0;
  for (const Column& c : cols_) {
    if (c.ones > 0) ++ones;
    if (c.ones < c.height) ++twos;
  }
  return WeakComposition({ones, twos});
}

std::string Table12::to_string() const { return to_filling().to_string(); }

Table12 flip(const Table12& t) {
  std::vector<Table12::Column> cols = t.columns();
  for (auto& c : cols) {
    if (c.ones == c.height) {
      c.ones = 0;
    } else if (c.ones == 0) {
      c.ones = c.height;
    }
  }
  return Table12::same_domain(std::move(cols));
}

namespace {

struct DescentContext {
  ColumnClass left;
  ColumnClass right;
};

bool is_descent_pair(const Table12::Column* a, const Table12::Column* b) {
  if (a == nullptr || b == nullptr) return false;
  int lo = std::max(a->top + a->ones, b->top);
  int hi = std::min(a->top + a->height, b->top + b->ones);
  return lo < hi;
}

DescentContext descent_context(const Table12& t, int k) {
  if (k < 1) throw NotADescent("no descent at the requested column");
  const Table12::Column* a = t.find_column(k);
  const Table12::Column* b = t.find_column(k + 1);
  if (!is_descent_pair(a, b)) throw NotADescent("no descent at the requested column");
  ColumnClass left = class_of(*a);
  ColumnClass right = class_of(*b);
  if (left == ColumnClass::Mixed && right == ColumnClass::Mixed) {
    throw NotBenign("adjacent mixed columns form a descent only in non-benign tables");
  }
  return {left, right};
}

}  // namespace

DescentType descent_type(const Table12& t, int k) {
  auto [left, right] = descent_context(t, k);
  if (left == ColumnClass::Mixed) return DescentType::M1;
  if (right == ColumnClass::Mixed) return DescentType::TwoM;
  return DescentType::TwoOne;
}

Table12 resolve(const Table12& t, int k) {
  DescentType type = descent_type(t, k);
  std::vector<Table12::Column> cols = t.columns();
  auto at = [&](int col) -> Table12::Column& {
    auto it = std::lower_bound(cols.begin(), cols.end(), col,
                               [](const Table12::Column& c, int key) { return c.col < key; });
    DG_CHECK(it != cols.end() && it->col == col);
    return *it;
  };
  Table12::Column& a = at(k);
  Table12::Column& b = at(k + 1);
  switch (type) {
    case DescentType::M1: {
      int s = a.top + a.ones;  // separator row of the mixed column k
      a.ones = a.height;
      b.ones = s - b.top;
      DG_CHECK(0 < b.ones && b.ones < b.height);
      break;
    }
    case DescentType::TwoM: {
      int s = b.top + b.ones;  // separator row of the mixed column k+1
      b.ones = 0;
      a.ones = s - a.top;
      DG_CHECK(0 < a.ones && a.ones < a.height);
      break;
    }
    case DescentType::TwoOne: {
      a.ones = a.height;
      b.ones = 0;
      break;
    }
  }
  return Table12::same_domain(std::move(cols));
}

}  // namespace dualgroth

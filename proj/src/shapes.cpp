#include "dualgroth/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace dualgroth {

std::string Interval::to_string() const {
  if (empty()) return "{}";
  std::ostringstream os;
  os << '[' << lo << ',' << hi - 1 << ']';
  return os.str();
}

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.col < 1) throw InvalidArgument("cells must have positive coordinates");
  }
}

bool CellSet::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool is_convex(const CellSet& z) {
  // Equivalent interval characterization of the definition (every cell
  // between two cells of z, componentwise, lies in z): each row is a
  // contiguous interval, both endpoints weakly decrease from row to row,
  // and rows separated by an empty row must not share a column.
  const auto& cells = z.cells();  // sorted row-major
  std::size_t k = 0;
  int prev_row = 0, prev_lo = 0, prev_hi = 0;
  bool have_prev = false;
  while (k < cells.size()) {
    int row = cells[k].row;
    int lo = cells[k].col;
    int hi = lo;
    ++k;
    while (k < cells.size() && cells[k].row == row) {
      if (cells[k].col != hi + 1) return false;  // gap inside a row
      hi = cells[k].col;
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

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw NotAPartition("partition parts must be positive");
    if (k > 0 && parts_[k - 1] < parts_[k]) {
      throw NotAPartition("partition parts must be weakly decreasing");
    }
  }
}

int Partition::part(int i) const {
  if (i < 1) throw InvalidArgument("partition row index must be positive");
  if (i > num_rows()) return 0;
  return parts_[static_cast<std::size_t>(i) - 1];
}

long long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= mu.num_rows(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) os << ',';
    os << parts_[k];
  }
  return os.str();
}

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (!lambda_.contains(mu_)) throw NotContained("mu is not contained in lambda");
}

long long SkewShape::num_cells() const { return lambda_.sum() - mu_.sum(); }

bool SkewShape::contains(int row, int col) const {
  if (row < 1 || row > num_rows()) return false;
  return mu_.part(row) < col && col <= lambda_.part(row);
}

Interval SkewShape::row_cells(int i) const {
  if (i < 1 || i > num_rows()) return {};
  return {mu_.part(i) + 1, lambda_.part(i) + 1};
}

Interval SkewShape::support(int i) const {
  if (i < 1) throw InvalidArgument("support row index must be positive");
  Interval s{mu_.part(i) + 1, lambda_.part(i + 1) + 1};
  if (s.empty()) return {};
  return s;
}

CellSet SkewShape::cells() const { return CellSet(cell_list()); }

std::vector<Cell> SkewShape::cell_list() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(num_cells()));
  for (int i = 1; i <= num_rows(); ++i) {
    Interval r = row_cells(i);
    for (int j = r.lo; j < r.hi; ++j) out.push_back({i, j});
  }
  return out;
}

bool SkewShape::operator==(const SkewShape& other) const {
  int rows = std::max(num_rows(), other.num_rows());
  for (int i = 1; i <= rows; ++i) {
    Interval a = row_cells(i);
    Interval b = other.row_cells(i);
    if (a.empty() != b.empty()) return false;
    if (!a.empty() && a != b) return false;
  }
  return true;
}

std::string SkewShape::to_string() const {
  if (lambda_.empty()) return "0";
  std::string s = lambda_.to_string();
  if (!mu_.empty()) {
    s += '/';
    s += mu_.to_string();
  }
  return s;
}

namespace {

std::vector<int> parse_part_list(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty part list");
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number in part list: '" + text + "'");
    if (pos - start > 9) throw ParseError("part too large: '" + text + "'");
    parts.push_back(std::stoi(text.substr(start, pos - start)));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in part list: '" + text + "'");
    ++pos;
  }
  return parts;
}

}  // namespace

SkewShape parse_skew(const std::string& text) {
  std::size_t slash = text.find('/');
  if (text.find('/', slash == std::string::npos ? slash : slash + 1) != std::string::npos) {
    throw ParseError("more than one '/' in shape: '" + text + "'");
  }
  std::string lam_text = slash == std::string::npos ? text : text.substr(0, slash);
  Partition lambda{parse_part_list(lam_text)};
  Partition mu;
  if (slash != std::string::npos) mu = Partition{parse_part_list(text.substr(slash + 1))};
  return SkewShape(std::move(lambda), std::move(mu));
}

namespace {

// Canonical shape spanned by the given nonempty cell list, translated so
// rows and columns start at 1. Rows of the input must be intervals.
PlacedComponent canonicalize_cells(const std::vector<Cell>& cells) {
  int min_row = cells.front().row, max_row = cells.front().row;
  int min_col = cells.front().col;
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  std::map<int, Interval> rows;
  for (const Cell& c : cells) {
    auto [it, fresh] = rows.try_emplace(c.row, Interval{c.col, c.col + 1});
    if (!fresh) {
      it->second.lo = std::min(it->second.lo, c.col);
      it->second.hi = std::max(it->second.hi, c.col + 1);
    }
  }
  std::vector<int> lam, mu;
  for (int r = min_row; r <= max_row; ++r) {
    auto it = rows.find(r);
    DG_CHECK(it != rows.end());
    lam.push_back(it->second.hi - 1 - (min_col - 1));
    mu.push_back(it->second.lo - 1 - (min_col - 1));
  }
  PlacedComponent pc;
  pc.shape = SkewShape(Partition(std::move(lam)), Partition(std::move(mu)));
  pc.row_offset = min_row - 1;
  pc.col_offset = min_col - 1;
  return pc;
}

}  // namespace

std::vector<PlacedComponent> connected_components_placed(const SkewShape& shape) {
  std::vector<Cell> cells = shape.cell_list();
  std::vector<int> comp(cells.size(), -1);
  auto index_of = [&](Cell c) -> int {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    return static_cast<int>(it - cells.begin());
  };
  int ncomp = 0;
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      Cell c = cells[static_cast<std::size_t>(v)];
      for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                     Cell{c.row, c.col + 1}}) {
        int w = index_of(n);
        if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<Cell>> groups(static_cast<std::size_t>(ncomp));
  for (std::size_t k = 0; k < cells.size(); ++k) {
    groups[static_cast<std::size_t>(comp[k])].push_back(cells[k]);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    int ca = a.front().col, cb = b.front().col;
    for (const Cell& c : a) ca = std::min(ca, c.col);
    for (const Cell& c : b) cb = std::min(cb, c.col);
    return ca < cb;
  });
  std::vector<PlacedComponent> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(canonicalize_cells(g));
  return out;
}

std::vector<SkewShape> connected_components(const SkewShape& shape) {
  std::vector<SkewShape> out;
  for (auto& pc : connected_components_placed(shape)) out.push_back(std::move(pc.shape));
  return out;
}

bool is_connected(const SkewShape& shape) {
  return connected_components_placed(shape).size() <= 1;
}

bool has_no_empty_columns(const SkewShape& shape) {
  for (int c = 1; c <= shape.num_cols(); ++c) {
    bool used = false;
    for (int r = 1; r <= shape.num_rows() && !used; ++r) used = shape.contains(r, c);
    if (!used) return false;
  }
  return true;
}

SkewShape restrict_columns(const SkewShape& shape, int a, int b) {
  if (a < 1 || a >= b) throw InvalidArgument("column restriction needs 1 <= a < b");
  std::vector<Cell> kept;
  for (const Cell& c : shape.cell_list()) {
    if (a <= c.col && c.col < b) kept.push_back(c);
  }
  if (kept.empty()) throw EmptyRestriction("no cell has a column in the requested interval");
  return canonicalize_cells(kept).shape;
}

SkewShape restrict_columns_keep_rows(const SkewShape& shape, int a, int b) {
  if (a < 1 || a >= b) throw InvalidArgument("column restriction needs 1 <= a < b");
  std::vector<int> lam, mu;
  int width = b - a;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    int lo = std::max(shape.mu().part(i) - (a - 1), 0);
    int hi = std::min(shape.lambda().part(i) - (a - 1), width);
    lo = std::clamp(lo, 0, width);
    hi = std::max(hi, lo);  // empty row collapses to lambda_i = mu_i
    lam.push_back(hi);
    mu.push_back(lo);
  }
  return SkewShape(Partition(std::move(lam)), Partition(std::move(mu)));
}

}  // namespace dualgroth

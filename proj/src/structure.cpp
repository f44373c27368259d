#include "dualgroth/structure.hpp"

#include <algorithm>
#include <sstream>

#include "dualgroth/enumeration.hpp"
#include "dualgroth/errors.hpp"

namespace dualgroth {

SeplistPartition::SeplistPartition(std::vector<int> nu) : nu_(std::move(nu)) {
  for (std::size_t k = 0; k < nu_.size(); ++k) {
    if (nu_[k] < 1) throw InvalidArgument("seplist entries must be positive");
    if (k > 0 && nu_[k - 1] < nu_[k]) {
      throw InvalidArgument("seplist entries must be weakly decreasing");
    }
  }
}

int SeplistPartition::at(int k) const {
  if (k < 1 || k > length()) throw InvalidArgument("seplist index out of range");
  return nu_[static_cast<std::size_t>(k) - 1];
}

std::string SeplistPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < nu_.size(); ++k) {
    if (k > 0) os << ',';
    os << nu_[k];
  }
  os << ')';
  return os.str();
}

CellSet nr_cells(const Table12& t) {
  if (!t.is_rpp12()) throw NotAnRpp("nr_cells expects a 12-rpp");
  std::vector<Cell> out;
  for (const Table12::Column& c : t.columns()) {
    if (c.ones > 0 && c.ones < c.height) out.push_back({c.top + c.ones - 1, c.col});
  }
  return CellSet(std::move(out));
}

SeplistPartition seplist_partition(const Table12& t) {
  if (!t.is_rpp12()) throw NotAnRpp("seplist_partition expects a 12-rpp");
  std::vector<int> nu;
  for (const Table12::Column& c : t.columns()) {
    if (c.ones > 0 && c.ones < c.height) nu.push_back(c.top + c.ones - 1);
  }
  return SeplistPartition(std::move(nu));
}

bool is_admissible(const SeplistPartition& nu, const SkewShape& shape) {
  for (int i : nu.entries()) {
    if (shape.support(i).empty()) return false;
  }
  return true;
}

namespace {

void require_admissible(const SeplistPartition& nu, const SkewShape& shape) {
  if (!is_admissible(nu, shape)) {
    throw NotAdmissible("some entry of nu has empty support in this shape");
  }
}

SeplistPartition select_entries(const SeplistPartition& nu, const SkewShape& shape, int a, int b,
                                bool subset) {
  require_admissible(nu, shape);
  if (a >= b) throw InvalidArgument("interval must satisfy a < b");
  Interval window{a, b};
  std::vector<int> picked;
  int first = -1, last = -1;
  for (int k = 1; k <= nu.length(); ++k) {
    Interval supp = shape.support(nu.at(k));
    bool in = subset ? supp.subset_of(window) : supp.intersects(window);
    if (in) {
      picked.push_back(nu.at(k));
      if (first < 0) first = k;
      last = k;
    }
  }
  // Supports move weakly to the right along nu, so the selection is a
  // contiguous run of indices.
  DG_CHECK(first < 0 || last - first + 1 == static_cast<int>(picked.size()));
  return SeplistPartition(std::move(picked));
}

}  // namespace

SeplistPartition nu_subset(const SeplistPartition& nu, const SkewShape& shape, int a, int b) {
  return select_entries(nu, shape, a, b, /*subset=*/true);
}

SeplistPartition nu_cap(const SeplistPartition& nu, const SkewShape& shape, int a, int b) {
  return select_entries(nu, shape, a, b, /*subset=*/false);
}

std::string to_string(NuClass c) {
  switch (c) {
    case NuClass::NonRepresentable: return "non-representable";
    case NuClass::Reducible: return "reducible";
    case NuClass::Irreducible: return "irreducible";
  }
  return "?";
}

NuClass classify(const SeplistPartition& nu, const SkewShape& shape) {
  require_admissible(nu, shape);
  int width = shape.num_cols();
  bool equality = false;
  for (int a = 1; a <= width + 1; ++a) {
    for (int b = a + 1; b <= width + 1; ++b) {
      int count = nu_subset(nu, shape, a, b).length();
      if (count > b - a) return NuClass::NonRepresentable;
      if (count == b - a) equality = true;
    }
  }
  return equality ? NuClass::Reducible : NuClass::Irreducible;
}

Decomposition decompose(const SeplistPartition& nu, const SkewShape& shape) {
  NuClass cls = classify(nu, shape);
  if (cls == NuClass::NonRepresentable) {
    throw NonRepresentableInput("nu is not the seplist-partition of any 12-rpp of this shape");
  }
  if (!shape.empty() && (!is_connected(shape) || !has_no_empty_columns(shape))) {
    throw DisconnectedShape("decomposition requires a connected shape without empty columns");
  }
  int width = shape.num_cols();

  // Forced-mixed blocks: maximal intervals [a,b) with #nu|sub[a,b) = b-a.
  // Overlapping or touching such intervals merge into another one, so the
  // maximal ones are disjoint with gaps of at least one column.
  std::vector<Interval> blocks;
  for (int a = 1; a <= width + 1; ++a) {
    for (int b = a + 1; b <= width + 1; ++b) {
      if (nu_subset(nu, shape, a, b).length() == b - a) blocks.push_back({a, b});
    }
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<Interval> merged;
  for (const Interval& blk : blocks) {
    if (!merged.empty() && blk.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, blk.hi);
    } else {
      merged.push_back(blk);
    }
  }
  for (std::size_t k = 1; k < merged.size(); ++k) DG_CHECK(merged[k - 1].hi < merged[k].lo);

  Decomposition dec;
  dec.mixed_blocks = merged;
  dec.mixed_count = nu.length();
  int prev_end = 1;  // b_0 = 1
  std::vector<int> concat;
  for (std::size_t k = 0; k <= merged.size(); ++k) {
    int next_start = k < merged.size() ? merged[k].lo : width + 1;  // a_{k+1}
    SeplistPartition comp = nu_cap(nu, shape, prev_end, std::max(next_start, prev_end + 1));
    if (prev_end >= next_start) comp = SeplistPartition{};  // empty gap at the boundary
    int degree = next_start - prev_end - comp.length();
    DG_CHECK(degree >= 0);
    for (int e : comp.entries()) concat.push_back(e);
    dec.components.push_back(std::move(comp));
    dec.degrees.push_back(degree);
    if (k < merged.size()) {
      for (int e : nu_subset(nu, shape, merged[k].lo, merged[k].hi).entries()) {
        concat.push_back(e);
      }
      prev_end = merged[k].hi;
    }
  }
  // The components interleaved with the forced-mixed entries recover nu.
  DG_CHECK(concat == nu.entries());
  return dec;
}

SparsePoly p_poly(int n) {
  if (n < 0) throw InvalidArgument("p_poly needs a nonnegative degree");
  SparsePoly p;
  for (int j = 0; j <= n; ++j) {
    p.add_term({WeakComposition({n - j, j}), {}}, 1);
  }
  return p;
}

SparsePoly q_formula(const SeplistPartition& nu, const SkewShape& shape,
                     bool zero_if_nonrepresentable) {
  if (classify(nu, shape) == NuClass::NonRepresentable) {
    if (zero_if_nonrepresentable) return SparsePoly::zero();
    throw NonRepresentableInput("nu is not the seplist-partition of any 12-rpp of this shape");
  }
  Decomposition dec = decompose(nu, shape);
  SparsePoly q = (SparsePoly::x(1) * SparsePoly::x(2)).pow(dec.mixed_count);
  for (int n : dec.degrees) q *= p_poly(n);
  return q;
}

SeplistPartition ceq_to_seplist(const SkewShape& shape, const WeakComposition& alpha) {
  std::vector<int> nu;
  int rows = std::max(shape.num_rows(), alpha.length());
  for (int i = 1; i <= rows; ++i) {
    int cap = shape.support(i).length();
    int count = cap - alpha.at(i);
    if (count < 0) throw InfeasibleCeq("ceq entry exceeds the row overlap of the shape");
    for (int c = 0; c < count; ++c) nu.push_back(i);
  }
  std::sort(nu.begin(), nu.end(), std::greater<int>());
  return SeplistPartition(std::move(nu));
}

WeakComposition seplist_to_ceq(const SkewShape& shape, const SeplistPartition& nu) {
  require_admissible(nu, shape);
  std::vector<int> alpha(static_cast<std::size_t>(std::max(shape.num_rows() - 1, 0)), 0);
  std::vector<int> count(alpha.size(), 0);
  for (int i : nu.entries()) {
    // Admissibility bounds the entries: support(i) nonempty forces a cell
    // in row i+1, so i < num_rows.
    DG_CHECK(i <= static_cast<int>(count.size()));
    ++count[static_cast<std::size_t>(i) - 1];
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    int cap = shape.support(static_cast<int>(k) + 1).length();
    if (count[k] > cap) throw InfeasibleCeq("more nu entries than the row overlap allows");
    alpha[k] = cap - count[k];
  }
  return WeakComposition(std::move(alpha));
}

std::vector<Table12> enumerate_by_seplist(const SkewShape& shape, const SeplistPartition& nu) {
  std::vector<Table12> out;
  ShapeScan scan(shape);
  for_each_filling_values(scan, 2, /*strict_cols=*/false,
                          [&](std::span<const Cell> cells, std::span<const int> vals) {
                            std::vector<int> rows;
                            for (std::size_t k = 0; k < cells.size(); ++k) {
                              // A mixed column shows as a 1 with a 2 directly below.
                              if (vals[k] == 1) {
                                Cell below{cells[k].row + 1, cells[k].col};
                                auto it = std::lower_bound(cells.begin(), cells.end(), below);
                                if (it != cells.end() && *it == below &&
                                    vals[static_cast<std::size_t>(it - cells.begin())] == 2) {
                                  rows.push_back(cells[k].row);
                                }
                              }
                            }
                            std::sort(rows.begin(), rows.end(), std::greater<int>());
                            if (rows == nu.entries()) {
                              std::vector<std::pair<Cell, int>> items;
                              for (std::size_t k = 0; k < cells.size(); ++k) {
                                items.emplace_back(cells[k], vals[k]);
                              }
                              out.push_back(Table12::from_filling(Filling::from_pairs(items)));
                            }
                          });
  return out;
}

}  // namespace dualgroth

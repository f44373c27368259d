#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
// straightforward brute-force or textbook constructions used to freeze
// expected values.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dualgroth/filling.hpp"
#include "dualgroth/polynomial.hpp"
#include "dualgroth/shapes.hpp"

namespace oracles {

using dualgroth::Cell;
using dualgroth::CellSet;
using dualgroth::Int;
using dualgroth::Monomial;
using dualgroth::SkewShape;
using dualgroth::SparsePoly;
using dualgroth::WeakComposition;

// Literal transcription of the convexity condition: for every pair of cells
// and every componentwise-intermediate cell, membership is required.
inline bool convex_brute_force(const CellSet& z) {
  for (const Cell& a : z) {
    for (const Cell& b : z) {
      if (a.row > b.row || a.col > b.col) continue;
      for (int r = a.row; r <= b.row; ++r) {
        for (int c = a.col; c <= b.col; ++c) {
          if (!z.contains({r, c})) return false;
        }
      }
    }
  }
  return true;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Counts rpps (or, with strict_cols, semistandard tableaux) column by
// column: enumerate the weakly/strictly increasing fillings of each column
// and chain them with the row constraints against the previous column.
inline long long count_fillings_by_columns(const SkewShape& shape, int max_entry,
                                           bool strict_cols) {
  if (shape.empty()) return 1;
  int width = shape.num_cols();
  // rows occupied per column
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(width + 1));
  for (const Cell& c : shape.cell_list()) {
    col_rows[static_cast<std::size_t>(c.col)].push_back(c.row);
  }
  using ColFill = std::map<int, int>;  // row -> value
  auto column_fillings = [&](int col) {
    std::vector<ColFill> out;
    const auto& rows = col_rows[static_cast<std::size_t>(col)];
    if (rows.empty()) {
      out.push_back({});
      return out;
    }
    std::vector<int> vals(rows.size(), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == rows.size()) {
        ColFill f;
        for (std::size_t i = 0; i < rows.size(); ++i) f[rows[i]] = vals[i];
        out.push_back(std::move(f));
        return;
      }
      int lo = 1;
      if (k > 0) lo = strict_cols ? vals[k - 1] + 1 : vals[k - 1];
      for (int v = lo; v <= max_entry; ++v) {
        vals[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    return out;
  };
  std::vector<ColFill> prev_states = column_fillings(1);
  std::vector<long long> prev_counts(prev_states.size(), 1);
  for (int col = 2; col <= width; ++col) {
    std::vector<ColFill> states = column_fillings(col);
    std::vector<long long> counts(states.size(), 0);
    for (std::size_t s = 0; s < states.size(); ++s) {
      for (std::size_t p = 0; p < prev_states.size(); ++p) {
        bool ok = true;
        for (const auto& [row, value] : states[s]) {
          auto it = prev_states[p].find(row);
          if (it != prev_states[p].end() && it->second > value) {
            ok = false;
            break;
          }
        }
        if (ok) counts[s] += prev_counts[p];
      }
    }
    prev_states = std::move(states);
    prev_counts = std::move(counts);
  }
  return std::accumulate(prev_counts.begin(), prev_counts.end(), 0LL);
}

// Complete homogeneous polynomial h_n(x_1..x_nx) by enumerating weakly
// increasing index sequences.
inline SparsePoly h_poly(int n, int nx) {
  SparsePoly acc;
  std::vector<int> seq(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int k, int lo) -> void {
    if (k == n) {
      std::vector<int> exp(static_cast<std::size_t>(nx), 0);
      for (int i : seq) ++exp[static_cast<std::size_t>(i) - 1];
      acc.add_term({WeakComposition(std::move(exp)), {}}, 1);
      return;
    }
    for (int v = lo; v <= nx; ++v) {
      seq[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, v);
    }
  };
  if (n == 0) return SparsePoly::constant(1);
  if (nx == 0) return SparsePoly::zero();
  rec(rec, 0, 1);
  return acc;
}

// Elementary symmetric polynomial e_n in the combined variable list
// (t_1, ..., t_nt, x_1, ..., x_nx), by enumerating n-element subsets.
inline SparsePoly e_poly_mixed(int n, int nt, int nx) {
  int total = nt + nx;
  SparsePoly acc;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<int> te(static_cast<std::size_t>(nt), 0);
      std::vector<int> xe(static_cast<std::size_t>(nx), 0);
      for (int slot : pick) {
        if (slot <= nt) {
          te[static_cast<std::size_t>(slot) - 1] = 1;
        } else {
          xe[static_cast<std::size_t>(slot - nt) - 1] = 1;
        }
      }
      acc.add_term({WeakComposition(std::move(xe)), WeakComposition(std::move(te))}, 1);
      return;
    }
    for (int slot = next; slot <= total; ++slot) {
      pick.push_back(slot);
      self(self, slot + 1);
      pick.pop_back();
    }
  };
  if (n > total) return SparsePoly::zero();
  rec(rec, 1);
  return acc;
}

// e_n in x variables only.
inline SparsePoly e_poly(int n, int nx) { return e_poly_mixed(n, 0, nx); }

// Invariance under the whole symmetric group on x_1..x_n, checked by
// applying every permutation.
inline bool symmetric_all_perms(const SparsePoly& p, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (p.permute_x(perm) != p) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace oracles

#pragma once

#include <string>
#include <vector>

#include "dualgroth/polynomial.hpp"
#include "dualgroth/shapes.hpp"
#include "dualgroth/table12.hpp"

namespace dualgroth {

// Weakly decreasing list of positive row indices; the seplist-partition of a
// 12-rpp records, per mixed column, the row of the 1 sitting directly above
// the topmost 2.
class SeplistPartition {
 public:
  SeplistPartition() = default;
  explicit SeplistPartition(std::vector<int> nu);  // throws InvalidArgument

  int length() const { return static_cast<int>(nu_.size()); }
  // 1-based access to the k-th entry.
  int at(int k) const;
  const std::vector<int>& entries() const { return nu_; }
  bool empty() const { return nu_.empty(); }

  friend auto operator<=>(const SeplistPartition&, const SeplistPartition&) = default;

  std::string to_string() const;  // "(4,3,3,2)"

 private:
  std::vector<int> nu_;
};

// Cells of a 12-rpp holding a 1 directly above a 2 (the non-redundant 1s
// that are not lowest in their column); at most one per column.
// Throws NotAnRpp unless t is descent-free.
CellSet nr_cells(const Table12& t);

// Rows of nr_cells in increasing column order; weakly decreasing for 12-rpps.
SeplistPartition seplist_partition(const Table12& t);

// True iff every entry i of nu has nonempty support [mu_i+1, lambda_{i+1}].
bool is_admissible(const SeplistPartition& nu, const SkewShape& shape);

// Contiguous subpartition of the entries whose support is contained in
// (resp. intersects) the column interval [a,b). Throws NotAdmissible.
SeplistPartition nu_subset(const SeplistPartition& nu, const SkewShape& shape, int a, int b);
SeplistPartition nu_cap(const SeplistPartition& nu, const SkewShape& shape, int a, int b);

enum class NuClass { NonRepresentable, Reducible, Irreducible };
std::string to_string(NuClass c);

// Scans every column interval [a,b) inside [1, lambda_1+1):
//   some #nu|sub[a,b) >  b-a  ->  NonRepresentable (no 12-rpp has seplist nu),
//   all  #nu|sub[a,b) <  b-a  ->  Irreducible,
//   otherwise                 ->  Reducible.
// Throws NotAdmissible.
NuClass classify(const SeplistPartition& nu, const SkewShape& shape);

// Decomposition of a representable nu into irreducible components separated
// by forced-mixed column blocks [a_k, b_k).
struct Decomposition {
  std::vector<Interval> mixed_blocks;        // [a_k, b_k), k = 1..r, disjoint, gaps >= 1
  std::vector<SeplistPartition> components;  // r+1 components, original row indices
  std::vector<int> degrees;                  // degree of each component
  int mixed_count = 0;                       // #nu
  int r() const { return static_cast<int>(mixed_blocks.size()); }
};

// Throws NonRepresentableInput, DisconnectedShape (also covers empty columns),
// NotAdmissible.
Decomposition decompose(const SeplistPartition& nu, const SkewShape& shape);

// x1^n + x1^{n-1} x2 + ... + x2^n, the two-variable complete homogeneous
// polynomial of degree n; p_poly(0) = 1.
SparsePoly p_poly(int n);

// Closed form of the two-variable generating polynomial of the 12-rpps with
// seplist-partition nu: (x1 x2)^M * P_{n_0} * ... * P_{n_r} with M = #nu and
// the degrees n_k from decompose. Throws NonRepresentableInput unless
// zero_if_nonrepresentable is set, in which case it returns 0.
SparsePoly q_formula(const SeplistPartition& nu, const SkewShape& shape,
                     bool zero_if_nonrepresentable = false);

// The ceq vector and the seplist-partition of a 12-rpp determine each other:
// row i contributes lambda_{i+1} - mu_i - alpha_i entries equal to i.
// Feasibility: 0 <= alpha_i <= |support(i)| for every i.
SeplistPartition ceq_to_seplist(const SkewShape& shape, const WeakComposition& alpha);
WeakComposition seplist_to_ceq(const SkewShape& shape, const SeplistPartition& nu);

// All 12-rpps of the shape whose seplist-partition equals nu, in the
// enumeration order of the underlying rpps.
std::vector<Table12> enumerate_by_seplist(const SkewShape& shape, const SeplistPartition& nu);

}  // namespace dualgroth

#pragma once

// Shared hand-checked tableaux used across the test suites.

#include <vector>

#include "dualgroth/filling.hpp"
#include "dualgroth/shapes.hpp"
#include "dualgroth/table12.hpp"

namespace fixtures {

using dualgroth::Filling;
using dualgroth::parse_skew;
using dualgroth::SkewShape;
using dualgroth::Table12;

// Three fillings of (3,2,2)/(1): (a) not an rpp, (b) an rpp that is not
// semistandard, (c) a semistandard tableau.
inline Filling filling_a() {
  return Filling::on_shape(parse_skew("3,2,2/1"), std::vector<int>{6, 3, 2, 4, 3, 4});
}
inline Filling filling_b() {
  return Filling::on_shape(parse_skew("3,2,2/1"), std::vector<int>{3, 3, 2, 3, 3, 4});
}
inline Filling filling_c() {
  return Filling::on_shape(parse_skew("3,2,2/1"), std::vector<int>{3, 3, 2, 4, 3, 7});
}

// 12-table of shape (6,4,4,2)/(2,1) with ell = 18, descents {1,4} and
// seplist (4); column 2 is mixed, column 3 is 1-pure.
inline Table12 ell18_table() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("6,4,4,2/2,1"), std::vector<int>{1, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2, 2}));
}

// Variant of ell18_table with columns 3 and 4 replaced by (1,2,2) and
// (1,1,2); its seplist (4,2,3) is not weakly decreasing.
inline Table12 non_benign_table() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("6,4,4,2/2,1"), std::vector<int>{1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 2}));
}

// 12-table of shape (5,5,3,3)/(2,1) with seplist (4,4,2): mixed columns
// 1, 3 and 5 with separator rows 4, 4 and 2.
inline Table12 seplist442_table() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("5,5,3,3/2,1"), std::vector<int>{1, 1, 1, 2, 1, 1, 2, 1, 2, 1, 2, 2, 2}));
}

// Benign 12-table of shape (5,4,3,3,1)/(2,1) with descents 1 (2-pure then
// mixed), 2 (mixed then 1-pure) and 4 (2-pure then 1-pure), and its three
// one-step resolutions.
inline Table12 resolve_example() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("5,4,3,3,1/2,1"), std::vector<int>{1, 2, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 2}));
}
inline Table12 resolve_example_res1() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("5,4,3,3,1/2,1"), std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2}));
}
inline Table12 resolve_example_res2() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("5,4,3,3,1/2,1"), std::vector<int>{1, 2, 1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 2}));
}
inline Table12 resolve_example_res4() {
  return Table12::from_filling(Filling::on_shape(
      parse_skew("5,4,3,3,1/2,1"), std::vector<int>{1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 2, 1, 2}));
}

// Running example shape for the structure theory.
inline SkewShape running_shape() { return parse_skew("7,7,7,4,4/5,3,2"); }

// Two 12-rpps of the running shape, both with seplist-partition (4,3,3,2).
inline Table12 running_t1() {
  return Table12::from_filling(Filling::on_shape(
      running_shape(),
      std::vector<int>{1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2}));
}
inline Table12 running_t2() {
  return Table12::from_filling(Filling::on_shape(
      running_shape(),
      std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 2, 1, 2, 2, 2}));
}

// 12-sst of the convex set with row spans {9}, {6..8}, {4..7}, {1,2}, {1},
// together with its flip and its Bender-Knuth image.
inline Filling tall_sst() {
  return Filling::on_shape(parse_skew("9,8,7,2,1/8,5,3"),
                           std::vector<int>{1, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2});
}
inline Filling tall_sst_flip() {
  return Filling::on_shape(parse_skew("9,8,7,2,1/8,5,3"),
                           std::vector<int>{2, 1, 1, 1, 2, 1, 2, 2, 1, 1, 2});
}
inline Filling tall_sst_bk() {
  return Filling::on_shape(parse_skew("9,8,7,2,1/8,5,3"),
                           std::vector<int>{2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2});
}
inline Table12 tall_sst_to_table() { return Table12::from_filling(tall_sst()); }

// Semistandard tableau of shape (7,6,4,1)/(3) and its second Bender-Knuth
// image: the ignored columns for i=2 are columns 2 and 6.
inline Filling classical_example() {
  return Filling::on_shape(parse_skew("7,6,4,1/3"),
                           std::vector<int>{1, 1, 2, 2, 1, 2, 2, 2, 3, 3, 3, 3, 5, 6, 4});
}
inline Filling classical_example_image() {
  return Filling::on_shape(parse_skew("7,6,4,1/3"),
                           std::vector<int>{1, 1, 2, 3, 1, 2, 2, 3, 3, 3, 2, 3, 5, 6, 4});
}

}  // namespace fixtures

#include <doctest.h>

#include "dualgroth/gseries.hpp"
#include "dualgroth/shape_enum.hpp"
#include "dualgroth/shapes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualgroth;

TEST_CASE("gtilde of a single row is the complete homogeneous polynomial") {
  for (int n = 1; n <= 5; ++n) {
    for (int nx = 0; nx <= 3; ++nx) {
      SkewShape row{Partition({n}), {}};
      CHECK(gtilde(row, nx) == oracles::h_poly(n, nx));
    }
  }
}

TEST_CASE("gtilde of a single column is elementary symmetric in t's and x's") {
  for (int n = 1; n <= 5; ++n) {
    for (int nx = 0; nx <= 3; ++nx) {
      SkewShape column{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}};
      CHECK(gtilde(column, nx) == oracles::e_poly_mixed(n, n - 1, nx));
    }
  }
}

TEST_CASE("gtilde of (2,1) with two variables, term by term") {
  SparsePoly x1 = SparsePoly::x(1), x2 = SparsePoly::x(2), t1 = SparsePoly::t(1);
  SparsePoly expected = x1 * x1 * x2 + x1 * x2 * x2 + t1 * (x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(gtilde(parse_skew("2,1"), 2) == expected);
  CHECK(g_poly(parse_skew("2,1"), 2) ==
        x1 * x1 * x2 + x1 * x2 * x2 + x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(schur_poly(parse_skew("2,1"), 2) == x1 * x1 * x2 + x1 * x2 * x2);
}

TEST_CASE("degenerate shapes") {
  CHECK(gtilde(parse_skew("0"), 3) == SparsePoly::constant(1));
  CHECK(g_poly(parse_skew("0"), 0) == SparsePoly::constant(1));
  CHECK(schur_poly(parse_skew("1,1,1"), 2) == SparsePoly::zero());
  // single row carries no t variables
  CHECK(g_poly(parse_skew("4"), 2) == gtilde(parse_skew("4"), 2));
}

TEST_CASE("specializations and the top homogeneous component") {
  for (const SkewShape& s : all_skew_shapes(7, /*connected_only=*/false)) {
    SparsePoly g = gtilde(s, 3);
    CHECK(g.specialize_t(0) == schur_poly(s, 3));
    CHECK(g.specialize_t(1) == g_poly(s, 3));
    CHECK(g_poly(s, 3).x_homogeneous_component(s.num_cells()) == schur_poly(s, 3));
  }
}

TEST_CASE("gtilde is symmetric in the x variables") {
  CHECK(check_symmetry(parse_skew("3,2,2/1"), 3));
  CHECK(check_symmetry(parse_skew("2,1"), 2));
  CHECK(check_symmetry(parse_skew("0"), 3));
  for (const SkewShape& s : all_skew_shapes(7, /*connected_only=*/true)) {
    CHECK(check_symmetry(s, 3));
  }
}

TEST_CASE("gtilde of a disconnected shape is the product over components") {
  for (const SkewShape& s : all_skew_shapes(7, /*connected_only=*/false)) {
    SparsePoly product = SparsePoly::constant(1);
    for (const PlacedComponent& pc : connected_components_placed(s)) {
      // The t variables are indexed by rows of the original shape.
      product *= gtilde(pc.shape, 3).shift_t(pc.row_offset);
    }
    CHECK(product == gtilde(s, 3));
  }
}

TEST_CASE("schur polynomial equals the elementary symmetric oracle on columns") {
  for (int n = 1; n <= 4; ++n) {
    for (int nx = 0; nx <= 4; ++nx) {
      SkewShape column{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}};
      CHECK(schur_poly(column, nx) == oracles::e_poly(n, nx));
    }
  }
}

#include <doctest.h>

#include <random>

#include "dualgroth/json_io.hpp"
#include "dualgroth/polynomial.hpp"
#include "dualgroth/structure.hpp"
#include "oracles.hpp"

using namespace dualgroth;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, int nx, int nt, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  SparsePoly p;
  int terms = nterms(rng);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> xe(static_cast<std::size_t>(nx)), te(static_cast<std::size_t>(nt));
    for (auto& e : xe) e = expo(rng);
    for (auto& e : te) e = expo(rng);
    p.add_term({WeakComposition(std::move(xe)), WeakComposition(std::move(te))}, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  SparsePoly x1 = SparsePoly::x(1), x2 = SparsePoly::x(2);
  CHECK((x1 + SparsePoly::zero()) == x1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  // two routes to the same product
  SparsePoly lhs = p_poly(1) * p_poly(1);
  SparsePoly rhs = p_poly(0) * (x1 * x1 + SparsePoly::constant(2) * x1 * x2 + x2 * x2);
  CHECK(lhs == rhs);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SparsePoly a = random_poly(rng, 3, 2, 4);
    SparsePoly b = random_poly(rng, 3, 2, 4);
    SparsePoly c = random_poly(rng, 3, 2, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == SparsePoly::zero());
  }
}

TEST_CASE("swap_x examples and properties") {
  SparsePoly p = SparsePoly::x(1) * SparsePoly::x(1) * SparsePoly::x(2);
  CHECK(p.swap_x(1) == SparsePoly::x(1) * SparsePoly::x(2) * SparsePoly::x(2));
  CHECK(SparsePoly::x(3).swap_x(1) == SparsePoly::x(3));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    SparsePoly a = random_poly(rng, 3, 1, 4);
    SparsePoly b = random_poly(rng, 3, 1, 4);
    for (int i = 1; i <= 2; ++i) {
      CHECK(a.swap_x(i).swap_x(i) == a);
      CHECK((a * b).swap_x(i) == a.swap_x(i) * b.swap_x(i));
      CHECK((a + b).swap_x(i) == a.swap_x(i) + b.swap_x(i));
    }
  }
}

TEST_CASE("is_symmetric_x") {
  CHECK((SparsePoly::x(1) + SparsePoly::x(2)).is_symmetric_x(2));
  CHECK_FALSE((SparsePoly::x(1) * SparsePoly::x(1) * SparsePoly::x(2)).is_symmetric_x(2));
  CHECK(p_poly(3).is_symmetric_x(2));
  CHECK_THROWS_AS((void)SparsePoly::x(3).is_symmetric_x(2), VariableOutOfRange);
  CHECK(SparsePoly::zero().is_symmetric_x(0));
}

TEST_CASE("adjacent-swap symmetry equals full symmetric-group invariance") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      SparsePoly p = random_poly(rng, n, 0, 4);
      // also mix in some symmetrized polynomials so both answers occur
      if (trial % 3 == 0) {
        SparsePoly sym;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
          sym += p.permute_x(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        p = sym;
      }
      CHECK(p.is_symmetric_x(n) == oracles::symmetric_all_perms(p, n));
    }
  }
}

TEST_CASE("specialize_t") {
  SparsePoly p = SparsePoly::t(1) * SparsePoly::x(1) * SparsePoly::x(1) +
                 SparsePoly::x(1) * SparsePoly::x(2);
  CHECK(p.specialize_t(0) == SparsePoly::x(1) * SparsePoly::x(2));
  CHECK(p.specialize_t(1) ==
        SparsePoly::x(1) * SparsePoly::x(1) + SparsePoly::x(1) * SparsePoly::x(2));
  // terms merging under t=1
  SparsePoly q = SparsePoly::t(1) * SparsePoly::x(1) + SparsePoly::t(2) * SparsePoly::x(1);
  CHECK(q.specialize_t(1) == SparsePoly::constant(2) * SparsePoly::x(1));
}

TEST_CASE("shift_t renames variables") {
  SparsePoly p = SparsePoly::t(1) * SparsePoly::x(1) + SparsePoly::t(2);
  CHECK(p.shift_t(2) == SparsePoly::t(3) * SparsePoly::x(1) + SparsePoly::t(4));
  CHECK(p.shift_t(0) == p);
}

TEST_CASE("printing is deterministic and readable") {
  SparsePoly p = SparsePoly::x(1) * SparsePoly::x(1) - SparsePoly::constant(2) * SparsePoly::t(1);
  CHECK(p.to_string() == "-2*t1 + x1^2");
  CHECK(SparsePoly::zero().to_string() == "0");
  CHECK(SparsePoly::constant(1).to_string() == "1");
}

TEST_CASE("polynomial JSON round-trip") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly p = random_poly(rng, 3, 2, 5);
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
  // canonical term order: total degree, then position-wise lex on x, then t
  SparsePoly p = SparsePoly::x(1) + SparsePoly::t(1) * SparsePoly::x(2) + SparsePoly::x(2);
  nlohmann::json j = poly_to_json(p);
  REQUIRE(j.at("terms").size() == 3);
  CHECK(j.at("terms")[0].at("x") == nlohmann::json::array({0, 1}));
  CHECK(j.at("terms")[1].at("x") == nlohmann::json::array({1}));
  CHECK(j.at("terms")[2].at("t") == nlohmann::json::array({1}));
}

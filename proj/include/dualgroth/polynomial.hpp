#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "dualgroth/weak_composition.hpp"

namespace dualgroth {

using Int = boost::multiprecision::cpp_int;

// Monomial x^xexp * t^texp. Ordered graded-lexicographically: first by total
// degree, then lexicographically by x-exponents, then by t-exponents. This
// order is the canonical term order used for serialization.
struct Monomial {
  WeakComposition xexp;
  WeakComposition texp;

  long long degree() const { return xexp.sum() + texp.sum(); }
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& other) const;
  std::string to_string() const;  // "x1^2*x2*t1"; "1" for the empty monomial
};

// Multivariate polynomial in x1,x2,... and t1,t2,... with exact integer
// coefficients. Zero coefficients are never stored.
class SparsePoly {
 public:
  SparsePoly() = default;
  static SparsePoly zero() { return {}; }
  static SparsePoly constant(Int c);
  static SparsePoly monomial(Monomial m, Int c = 1);
  static SparsePoly x(int i);  // the variable x_i
  static SparsePoly t(int i);  // the variable t_i

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  const Int& coeff(const Monomial& m) const;  // 0 if absent

  void add_term(const Monomial& m, const Int& c);  // accumulating builder

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  bool operator==(const SparsePoly&) const = default;

  SparsePoly pow(int e) const;

  // Transposes the exponents of x_i and x_{i+1} in every term.
  SparsePoly swap_x(int i) const;
  // True iff the polynomial is invariant under swap_x(i) for all 1<=i<nvars.
  // Throws VariableOutOfRange if some term uses x_j with j > nvars.
  bool is_symmetric_x(int nvars) const;
  // Applies an arbitrary permutation of x_1..x_n (perm[i-1] is the image of i).
  SparsePoly permute_x(const std::vector<int>& perm) const;

  // Substitutes the given constant (0 or 1) for every t variable.
  SparsePoly specialize_t(int value) const;
  // Renames t_i to t_{i+offset} in every term.
  SparsePoly shift_t(int offset) const;

  // Largest x (resp. t) variable index appearing; 0 when none does.
  int max_x_var() const;
  int max_t_var() const;
  // Sum of the terms whose x-degree equals d.
  SparsePoly x_homogeneous_component(long long d) const;

  std::string to_string() const;  // deterministic, e.g. "x1^2*x2 + t1*x1^2"; "0"

 private:
  std::map<Monomial, Int> terms_;
};

}  // namespace dualgroth

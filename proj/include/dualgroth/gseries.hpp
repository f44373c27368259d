#pragma once

#include "dualgroth/polynomial.hpp"
#include "dualgroth/shapes.hpp"

namespace dualgroth {

// Truncation of the refined dual stable Grothendieck polynomial of the
// shape: the sum of t^ceq(T) * x^ircont(T) over all reverse plane partitions
// T with entries in 1..nx. Restricting the entries is the same as setting
// x_{nx+1} = x_{nx+2} = ... = 0 in the full power series; the t variables
// are never truncated (only t_1..t_{rows-1} can occur).
SparsePoly gtilde(const SkewShape& shape, int nx);

// gtilde with every t variable set to 1 (the unrefined polynomial g).
SparsePoly g_poly(const SkewShape& shape, int nx);

// Sum of x^cont(T) over semistandard tableaux with entries in 1..nx; equals
// gtilde with every t variable set to 0.
SparsePoly schur_poly(const SkewShape& shape, int nx);

// True iff gtilde(shape, nx) is invariant under exchanging adjacent
// x variables among x_1..x_nx.
bool check_symmetry(const SkewShape& shape, int nx);

}  // namespace dualgroth

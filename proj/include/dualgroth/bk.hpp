#pragma once

#include <cstdint>

#include "dualgroth/filling.hpp"
#include "dualgroth/rewriting.hpp"
#include "dualgroth/table12.hpp"

namespace dualgroth {

// Descent resolution as a rewriting instance: moves are descent columns in
// increasing order, applying a move resolves that descent, and ell is the
// strictly decreasing potential.
struct DescentResolution {
  using State = Table12;
  using Move = int;
  std::vector<int> moves(const Table12& t) const { return t.descents(); }
  Table12 apply(const Table12& t, int k) const { return resolve(t, k); }
  long long potential(const Table12& t) const { return t.ell(); }
};

// Resolves descents until none remain. The result is the unique descent-free
// table reachable from t, so the strategy only affects the path taken.
// Throws NotBenign unless t is benign.
Table12 normalize(const Table12& t, Strategy strategy = Strategy::MinFirst,
                  std::uint64_t seed = 0);

// Verifies that every pair of one-step descent resolutions of t rewrites to
// the same 12-rpp. Throws NotBenign unless t is benign.
bool check_local_confluence(const Table12& t);

// The Bender-Knuth involution on 12-rpps: normalize(flip(t)). Preserves ceq
// and transposes the first two entries of ircont. Throws NotAnRpp unless t
// is a 12-rpp (descent-free).
Table12 bk12(const Table12& t);

// The generalized Bender-Knuth involution B_i on reverse plane partitions:
// restrict to the entries i and i+1 (a convex subset), relabel them 1 and 2,
// apply bk12, and put the images back. Preserves ceq and transposes the
// entries i and i+1 of ircont. Throws NotAnRpp unless t is an rpp.
Filling bk_general(const Filling& t, int i);

// The classical Bender-Knuth involution on semistandard tableaux: ignoring
// columns that contain both i and i+1, each row's run of r free i's followed
// by s free (i+1)'s becomes s i's followed by r (i+1)'s. Throws NotAnSsyt
// unless t is semistandard.
Filling classical_bk(const Filling& t, int i);

}  // namespace dualgroth

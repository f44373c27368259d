#pragma once

#include <random>
#include <vector>

#include "dualgroth/shapes.hpp"
#include "dualgroth/table12.hpp"

namespace dualgroth {

// Every skew shape with 1..max_cells cells, up to translation: row 1 and
// column 1 are occupied and there are no empty rows or columns. Consecutive
// rows either overlap in a column (connected vertically) or touch exactly
// (the lower row ends where the upper row starts); with connected_only only
// the overlapping kind is emitted. max_width, when positive, bounds the
// number of columns (lambda_1).
std::vector<SkewShape> all_skew_shapes(int max_cells, bool connected_only, int max_width = 0);

// Uniformly random pick from a nonempty list.
const SkewShape& pick_shape(std::mt19937_64& rng, const std::vector<SkewShape>& shapes);

// Random benign 12-table of the given shape: columns are classified left to
// right, and a mixed column's separator row never exceeds the previous one.
Table12 random_benign_table(std::mt19937_64& rng, const SkewShape& shape);

// Random reverse plane partition of the shape with entries in 1..max_entry.
Filling random_rpp(std::mt19937_64& rng, const SkewShape& shape, int max_entry);

}  // namespace dualgroth

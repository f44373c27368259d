#pragma once

#include <json.hpp>

#include "dualgroth/filling.hpp"
#include "dualgroth/polynomial.hpp"
#include "dualgroth/shapes.hpp"

namespace dualgroth {

// {"lambda":[7,7,7,4,4],"mu":[5,3,2]}
nlohmann::json shape_to_json(const SkewShape& shape);
SkewShape shape_from_json(const nlohmann::json& j);

// {"shape":{...},"rows":[[null,6,3],[2,4],[3,4]]}; each row array spans
// columns 1..lambda_i with null outside the shape. The domain must be a
// skew diagram anchored at row 1 or padded by empty leading rows.
nlohmann::json filling_to_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

// {"terms":[{"c":1,"x":[2,1],"t":[]}, ...]} in the canonical term order.
nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j);

}  // namespace dualgroth

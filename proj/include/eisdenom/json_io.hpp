#pragma once

#include <json.hpp>

#include "eisdenom/eis_eval.hpp"
#include "eisdenom/quadfield.hpp"

namespace eisdenom {

using Json = nlohmann::ordered_json;

// Rationals are always strings ("a/b" or "a") so JSON stays lossless.
Json to_json(const Rational& q);
Json to_json(const Mat2& g);
Json to_json(const HomPoly& P);
// Cusp: "a/c" (infinity is "1/0"). Formal point: {"hnf": [a, b, d], "gamma": [a, b, c, d]}.
Json to_json(const PointRef& x);
Json to_json(const SymbolChain& ch);
Json to_json(const DenominatorReport& r);
Json to_json(const QForm& f);

Rational rational_from_json(const Json& j);
Mat2 mat2_from_json(const Json& j);
HomPoly hompoly_from_json(const Json& j);
PointRef point_from_json(const Json& j);
SymbolChain chain_from_json(const Json& j);

}  // namespace eisdenom

#pragma once

#include "hallprim/cyclic_hall.hpp"
#include "hallprim/hall_jordan.hpp"
#include "hallprim/symfunc.hpp"

#include <json.hpp>

namespace hallprim {

// Schemas: {"type", "basis", "var", "terms": [{"index": "2,1", "coeff": "(1-t)"}]}
// with coefficients in RatFunc::to_string form, and for NumHallElem
// {"type", "m", "q", "terms": [{"class": "[1;2]+[0;1]", "coeff": "-1/4", "v_exp": 0}]}.
// The *_from_json functions throw std::invalid_argument on schema violations.

nlohmann::json to_json(const SymFunc& x);
nlohmann::json to_json(const CExpr& x);
nlohmann::json to_json(const HallElem& x);
nlohmann::json to_json(const HallTensor& x);
nlohmann::json to_json(const NumHallElem& x);

SymFunc symfunc_from_json(const nlohmann::json& j);
CExpr cexpr_from_json(const nlohmann::json& j);
HallElem hall_elem_from_json(const nlohmann::json& j);
NumHallElem num_hall_elem_from_json(const nlohmann::json& j);

std::string to_latex(const NumHallElem& x);

}  // namespace hallprim

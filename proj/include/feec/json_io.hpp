#pragma once

#include <string>

#include "json.hpp"

#include "feec/forms.hpp"
#include "feec/ratmat.hpp"

namespace feec {

// Machine-readable form serialization.  Shape:
//   { "degree": k, "homogeneity": r?, "terms": [
//       { "coeff": "p/q", "s_power": m, "monomial": [e1,...], "indices": [i1,...] } ] }
// Coefficients are exact rational strings; indices are 1-based; homogeneity
// appears only when every term has the same value.  Round-trips losslessly.
nlohmann::json to_json(const DiffForm& a);
nlohmann::json to_json(const SimplexForm& a);

DiffForm diff_form_from_json(const nlohmann::json& j, int n);
SimplexForm simplex_form_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const RatMat& m);
RatMat ratmat_from_json(const nlohmann::json& j);

std::string to_csv(const RatMat& m);

}  // namespace feec

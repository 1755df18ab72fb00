#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chernform/curvature.hpp"
#include "chernform/form.hpp"

namespace chernform::io {

using nlohmann::json;

/// Scalar literal {"re": x, "im": y}. Numbers parse exactly as doubles;
/// strings "p/q" carry exact rationals (exact mode only).
Scalar scalar_from_json(const json& j, ScalarMode mode, const std::string& where);
json scalar_to_json(const Scalar& s);

/// Form literal {"n": int, "terms": [{"dz": [...], "dzbar": [...], "re": x, "im": y}, ...]}
/// with 1-based strictly increasing indices. If `n` is given, the literal's
/// "n" may be omitted and must match if present.
Form form_from_json(const json& j, ScalarMode mode, const std::string& where = "form", int n = 0);
json form_to_json(const Form& f, bool include_n = true);

/// Tensor instance {"n", "r", "m", "T": [p][i][k] of {re, im}}.
CurvatureTensor tensor_from_json(const json& j, ScalarMode mode);
json tensor_to_json(const CurvatureTensor& t);

/// Explicit curvature matrix {"n", "r", "omega": [[form, ...], ...]} (row i,
/// column j); entries use the Form literal syntax without "n".
CurvatureMatrix curvature_from_json(const json& j, ScalarMode mode);
json curvature_to_json(const CurvatureMatrix& omega);

/// Tangent-vector tuple [[{re, im}, ...], ...].
std::vector<TangentVector> vectors_from_json(const json& j, ScalarMode mode, int n);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string content_hash(const json& j);

}  // namespace chernform::io

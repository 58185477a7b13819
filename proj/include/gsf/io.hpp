#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gsf/ffield.hpp"
#include "gsf/formspace.hpp"
#include "gsf/matrix.hpp"

namespace gsf {

// JSON encodings. A scalar of GF(p) is a plain digit; a scalar of GF(p^s),
// s > 1, is its array of base-p digits (little-endian).

nlohmann::json scalar_json(const BaseField& F, Scalar x);
nlohmann::json vector_json(const BaseField& F, const Vec& v);
nlohmann::json matrix_json(const BaseField& F, const Mat& m);

/// {p, s, n, base_poly, ext_poly}
nlohmann::json tower_json(const FieldTower& tower);
nlohmann::json element_json(const FieldTower& tower, const FieldElement& a);
/// {b, i, gram}
nlohmann::json form_json(const FieldTower& tower, const SymForm& form);
/// {i, dim, basis} with the basis given as Gram matrices.
nlohmann::json form_subspace_json(const FieldTower& tower, const FormSubspace& forms);

/// Parses comma-separated base-p digits, little-endian. Over GF(p^s) the
/// digits run coefficient by coefficient, s per coefficient; missing trailing
/// digits are zero. Throws std::invalid_argument on malformed input.
FieldElement parse_element(const FieldTower& tower, const std::string& text);

}  // namespace gsf

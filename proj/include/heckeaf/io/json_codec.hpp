#pragma once

#include "heckeaf/afalg/af.hpp"

#include <json.hpp>

namespace heckeaf::io {

using nlohmann::json;

// Integers and rationals travel as strings; integer readers also accept JSON
// numbers for hand-written inputs. Readers throw SchemaError.
json to_json(const Integer& z);
json to_json(const Rational& q);
json to_json(const IntMatrix& m);
json to_json(const IntPolynomial& p);
json to_json(const FieldElement& a);
json to_json(const JpaDigit& d);
json to_json(const std::vector<JpaDigit>& ds);

Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
IntPolynomial polynomial_from_json(const json& j);
std::vector<JpaDigit> digits_from_json(const json& j);
FieldElement element_from_json(const FieldPtr& field, const json& j);

json descriptor_to_json(const AFDescriptor& d, std::size_t levels = 5);
AFDescriptor descriptor_from_json(const json& j);

/// Fetches a required member or throws SchemaError naming it.
const json& member(const json& j, const char* key);

}  // namespace heckeaf::io

#pragma once

#include "duadic/code.hpp"
#include "duadic/cyclotomic.hpp"
#include "duadic/field.hpp"
#include "duadic/matrix.hpp"
#include "duadic/poly.hpp"
#include "json.hpp"

// JSON forms of the algebraic objects. Field elements are written as
// coefficient sequences, constant term first.
namespace duadic {

using nlohmann::json;

json field_json(const Field& f);
/// Rebuilds the canonical field and checks that modulus/omega match. Throws ParseError.
FieldPtr field_from_json(const json& j);

json elem_json(const Field& f, Elem e);
/// Accepts a coefficient array or, for prime fields, a bare integer.
Elem elem_from_json(const Field& f, const json& j);

json poly_json(const Poly& p);
json matrix_json(const Field& f, const Matrix& m);
json vector_json(const Field& f, std::span<const Elem> v);

json defining_set_json(const DefiningSet& T);
DefiningSet defining_set_from_json(const json& j);

json distance_json(const Field& f, const DistanceResult& d);

json code_json(const LinearCode& c);
/// Restores the generator matrix together with provenance and extension
/// records when present, so that the same distance certificates apply.
LinearCode code_from_json(const json& j);

}  // namespace duadic

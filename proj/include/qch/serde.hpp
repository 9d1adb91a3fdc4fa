#pragma once

#include <string>

#include <json.hpp>

#include "qch/fc.hpp"
#include "qch/qc.hpp"

namespace qch {

// Field notation "q[:modulus=<poly over GF(p)>]", e.g. "5", "2^2",
// "4:modulus=x^2+x+1".  The order may be written as a plain prime power or as
// p^k; the modulus defaults to the pinned table entry.
const FieldSpec& parse_field_notation(const std::string& s);
std::string field_notation(const FieldSpec& f);

// JSON forms:
//   {"family":"qc1gen","q":"2","m":5,"generators":["x^3+1","x^2+x+1"]}
//   {"family":"dc","q":"5","m":8,"a":"4x^7+4x^6+x^3+4x^2+3x+2"}
//   {"family":"fc","q":"3","m":4,"a1":"2x^3+x^2+1","a2":"2x^3+1"}
// to_json output reparses to an equal spec (canonical polynomial printing).
nlohmann::json to_json(const QcSpec& spec);
nlohmann::json to_json(const DcSpec& spec);
nlohmann::json to_json(const FcSpec& spec);
QcSpec qc_from_json(const nlohmann::json& j);
DcSpec dc_from_json(const nlohmann::json& j);
FcSpec fc_from_json(const nlohmann::json& j);

// Helper shared by the JSON readers and the CLI: a ring element from its
// polynomial string.
RingElement ring_element_from_string(const std::string& s, const FieldSpec& f, int m);

}  // namespace qch

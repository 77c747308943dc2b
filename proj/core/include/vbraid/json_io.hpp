#ifndef VBRAID_JSON_IO_HPP
#define VBRAID_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "vbraid/field_value.hpp"
#include "vbraid/polynomial.hpp"
#include "vbraid/rational.hpp"
#include "vbraid/rational_function.hpp"

// Structural JSON forms of the exact-algebra types:
//   Rational          "p/q"
//   Polynomial        [{"coefficient": "p/q", "monomial": [[var, exp], ...]}, ...]
//   RationalFunction  {"num": Polynomial, "den": Polynomial}
//   FieldValue        {"rational": "p/q"} | {"function": RationalFunction}

namespace vbraid {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);

void to_json(nlohmann::json& j, const FieldValue& v);
void from_json(const nlohmann::json& j, FieldValue& v);

}  // namespace vbraid

#endif  // VBRAID_JSON_IO_HPP

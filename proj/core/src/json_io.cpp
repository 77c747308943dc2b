#include "vbraid/json_io.hpp"

#include "vbraid/errors.hpp"

namespace vbraid {

using nlohmann::json;

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (!j.is_string()) throw SyntaxError("rational must be a \"p/q\" string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const Polynomial& p) {
  j = json::array();
  for (const auto& t : p.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : t.monomial.factors()) mono.push_back({v, e});
    j.push_back({{"coefficient", t.coefficient.str()}, {"monomial", std::move(mono)}});
  }
}

void from_json(const json& j, Polynomial& p) {
  if (!j.is_array()) throw SyntaxError("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& jt : j) {
    if (!jt.is_object() || !jt.contains("coefficient") || !jt.contains("monomial")) {
      throw SyntaxError("polynomial term needs \"coefficient\" and \"monomial\"");
    }
    Monomial m;
    for (const auto& f : jt.at("monomial")) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_number_integer()) {
        throw SyntaxError("monomial factor must be [var, exp]");
      }
      const auto v = f[0].get<long long>();
      const auto e = f[1].get<long long>();
      if (v < 1 || e < 0) throw SyntaxError("monomial factor out of range");
      m = m * Monomial::variable(static_cast<Var>(v), static_cast<std::uint32_t>(e));
    }
    terms.push_back(Term{std::move(m), jt.at("coefficient").get<Rational>()});
  }
  p = Polynomial::from_terms(std::move(terms));
}

void to_json(json& j, const RationalFunction& f) { j = {{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RationalFunction& f) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw SyntaxError("rational function needs \"num\" and \"den\"");
  }
  f = RationalFunction(j.at("num").get<Polynomial>(), j.at("den").get<Polynomial>());
}

void to_json(json& j, const FieldValue& v) {
  if (v.is_rational()) {
    j = {{"rational", v.rational()}};
  } else {
    j = {{"function", v.function()}};
  }
}

void from_json(const json& j, FieldValue& v) {
  if (j.is_object() && j.contains("rational")) {
    v = FieldValue(j.at("rational").get<Rational>());
  } else if (j.is_object() && j.contains("function")) {
    v = FieldValue(j.at("function").get<RationalFunction>());
  } else {
    throw SyntaxError("field value needs \"rational\" or \"function\"");
  }
}

}  // namespace vbraid

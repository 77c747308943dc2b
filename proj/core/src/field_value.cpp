#include "vbraid/field_value.hpp"

#include "vbraid/errors.hpp"

namespace vbraid {

namespace {

[[noreturn]] void mixed() { throw KindMismatch("arithmetic mixes a number with a rational function; promote explicitly"); }

template <class Op>
FieldValue combine(const FieldValue& a, const FieldValue& b, Op op) {
  if (a.is_rational() && b.is_rational()) return FieldValue(op(a.rational(), b.rational()));
  if (a.is_function() && b.is_function()) return FieldValue(op(a.function(), b.function()));
  mixed();
}

bool looks_rational(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  bool digits = false;
  bool slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

}  // namespace

FieldValue FieldValue::parse(std::string_view text) {
  if (looks_rational(text)) return FieldValue(Rational::parse(text));
  return FieldValue(RationalFunction::parse(text));
}

FieldValue FieldValue::promote(const FieldValue& v) {
  if (v.is_function()) return v;
  return FieldValue(RationalFunction(v.rational()));
}

const Rational& FieldValue::rational() const {
  if (!is_rational()) throw KindMismatch("value is a rational function, not a number");
  return std::get<Rational>(value_);
}

const RationalFunction& FieldValue::function() const {
  if (!is_function()) throw KindMismatch("value is a number, not a rational function");
  return std::get<RationalFunction>(value_);
}

bool FieldValue::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

std::string FieldValue::str(char prefix) const {
  if (is_rational()) return rational().str();
  return function().str(prefix);
}

FieldValue FieldValue::operator-() const {
  return std::visit([](const auto& v) { return FieldValue(-v); }, value_);
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_function() && b.is_function()) return a.function() == b.function();
  return false;
}

FieldValue substitute(const RationalFunction& f, const Assignment& values, bool partial) {
  if (partial) return FieldValue(f.substitute(values));
  const Var top = std::max(f.num().max_variable(), f.den().max_variable());
  for (Var v = 1; v <= top; ++v) {
    const bool used = [&] {
      for (const Polynomial* p : {&f.num(), &f.den()}) {
        for (const auto& t : p->terms()) {
          if (t.monomial.exponent(v) != 0) return true;
        }
      }
      return false;
    }();
    if (used && !values.contains(v)) {
      throw KindMismatch("full substitution leaves variable " + std::to_string(v) + " unassigned");
    }
  }
  const Polynomial num = f.num().substitute(values);
  const Polynomial den = f.den().substitute(values);
  if (den.is_zero()) throw SingularPoint("denominator evaluates to zero");
  return FieldValue(num.constant_value() / den.constant_value());
}

}  // namespace vbraid

#ifndef VBRAID_FIELD_VALUE_HPP
#define VBRAID_FIELD_VALUE_HPP

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include "vbraid/rational.hpp"
#include "vbraid/rational_function.hpp"

namespace vbraid {

/// Either an exact number or a rational function. Arithmetic requires both
/// operands to carry the same tag (KindMismatch otherwise); promote a
/// number explicitly with `promote`.
class FieldValue {
 public:
  FieldValue() : value_(Rational(0)) {}
  FieldValue(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(RationalFunction f) : value_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(long c) : value_(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// A plain rational ("-3/4") parses as a number; anything else as a
  /// rational function.
  static FieldValue parse(std::string_view text);

  static FieldValue promote(const FieldValue& v);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_function() const { return std::holds_alternative<RationalFunction>(value_); }
  const Rational& rational() const;
  const RationalFunction& function() const;

  bool is_zero() const;
  std::string str(char prefix = 'z') const;

  FieldValue operator-() const;
  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);

  /// Same tag and equal values (rational functions by cross-multiplication).
  friend bool operator==(const FieldValue& a, const FieldValue& b);

 private:
  std::variant<Rational, RationalFunction> value_;
};

inline bool is_zero(const FieldValue& v) { return v.is_zero(); }

/// The constant `c` carrying the same tag as `like`.
inline FieldValue constant_like(const FieldValue& like, const Rational& c) {
  if (like.is_function()) return FieldValue(RationalFunction(c));
  return FieldValue(c);
}

/// Substitutes exact values. With `partial` false every variable must be
/// assigned and the result is a number; otherwise the result is a function
/// in the remaining variables. Throws SingularPoint when the denominator
/// vanishes (to zero, or to the zero polynomial).
FieldValue substitute(const RationalFunction& f, const Assignment& values, bool partial);

/// Scalars the birational kernels can act on: exact numbers, rational
/// functions, or the tagged union of both.
template <class T>
concept FieldElement = std::regular<T> && requires(const T& a, const T& b, const Rational& c) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { constant_like(a, c) } -> std::convertible_to<T>;
};

/// Integer power; negative exponents divide (DivisionByZero on zero base).
template <FieldElement T>
T power(const T& base, int exponent) {
  T result = constant_like(base, Rational(1));
  const bool invert = exponent < 0;
  unsigned e = static_cast<unsigned>(invert ? -exponent : exponent);
  T b = base;
  while (e != 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e != 0) b = b * b;
  }
  return invert ? constant_like(base, Rational(1)) / result : result;
}

}  // namespace vbraid

#endif  // VBRAID_FIELD_VALUE_HPP

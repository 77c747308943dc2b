#ifndef VBRAID_RATIONAL_FUNCTION_HPP
#define VBRAID_RATIONAL_FUNCTION_HPP

#include <string>
#include <string_view>

#include "vbraid/polynomial.hpp"
#include "vbraid/rational.hpp"

namespace vbraid {

/// Quotient of two polynomials with rational coefficients.
///
/// No polynomial gcd is taken. The pair is normalized only by
///  - removing the common monomial factor of numerator and denominator,
///  - scaling so all coefficients are integers with joint content 1,
///  - making the denominator's leading coefficient positive,
///  - collapsing num = c m den to c m, and den = c m num to 1/(c m), for a
///    constant c and monomial m.
/// Equality (operator==) is by cross-multiplication, so unreduced pairs
/// representing the same function compare equal. Use `identical` for
/// representation equality.
///
/// Degree grows with composition depth since common factors are not
/// cancelled; symbolic work is meant for short words.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero if `den` is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

  /// Parses an arithmetic expression over rationals and variables such as
  /// "-z1*z3*z4/(1+z1+z4)", "(y2 y4)^-1" or "3/2*x1^2". Variables are a letter
  /// prefix followed by a 1-based index; one prefix per expression.
  static RationalFunction parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_constant().
  Rational constant_value() const;

  RationalFunction inv() const;
  RationalFunction pow(int exponent) const;

  /// Partial substitution. Throws SingularPoint if the denominator becomes
  /// the zero polynomial.
  RationalFunction substitute(const Assignment& values) const;

  /// "num" when the denominator is 1, otherwise "num/den" with parentheses
  /// wherever needed for parse() to read it back.
  std::string str(char prefix = 'z') const;

  bool identical(const RationalFunction& other) const { return num_ == other.num_ && den_ == other.den_; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// f.num * g.den == g.num * f.den.
  friend bool operator==(const RationalFunction& f, const RationalFunction& g);

 private:
  struct Raw {};
  RationalFunction(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction constant_like(const RationalFunction&, const Rational& c) { return RationalFunction(c); }

}  // namespace vbraid

#endif  // VBRAID_RATIONAL_FUNCTION_HPP

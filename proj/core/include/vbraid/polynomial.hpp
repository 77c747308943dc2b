#ifndef VBRAID_POLYNOMIAL_HPP
#define VBRAID_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/rational.hpp"

namespace vbraid {

/// 1-based variable index.
using Var = std::uint32_t;

/// Exact values for some or all variables.
using Assignment = std::map<Var, Rational>;

/// Power product of variables. Stored densely by variable index with trailing
/// zero exponents trimmed, so the empty monomial is the constant 1 and equal
/// monomials are equal bit-for-bit.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> factors);

  static Monomial variable(Var v, std::uint32_t exponent = 1);

  std::uint32_t exponent(Var v) const { return v >= 1 && v <= exps_.size() ? exps_[v - 1] : 0; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  /// Highest variable index with a nonzero exponent, 0 for the constant.
  Var max_variable() const { return static_cast<Var>(exps_.size()); }
  /// (variable, exponent) pairs with positive exponent, ascending variable.
  std::vector<std::pair<Var, std::uint32_t>> factors() const;

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Drops the listed variables, returning what remains.
  Monomial without(Var v) const;

  std::string str(char prefix = 'z') const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Canonical term order: total degree ascending, then lexicographic with
/// the lower variable index more significant and larger exponents first
/// (so z1 precedes z4 and z1*z4 precedes z1*z6 precedes z4*z6).
std::strong_ordering term_order(const Monomial& a, const Monomial& b);

struct TermLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_order(a, b) < 0; }
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// by term_order with nonzero coefficients, which makes the representation
/// unique.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c = Rational(1));

  static Polynomial variable(Var v) { return Polynomial(Monomial::variable(v)); }
  /// Sorts, merges equal monomials, and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one()); }
  /// Requires is_constant().
  Rational constant_value() const;
  /// Coefficient of the last term in canonical order. Zero for the zero polynomial.
  Rational leading_coefficient() const;
  std::uint32_t total_degree() const;
  Var max_variable() const;

  /// GCD of all monomials (the largest monomial dividing every term).
  Monomial monomial_content() const;
  Polynomial divide_by(const Monomial& m) const;

  Polynomial pow(unsigned exponent) const;

  /// Substitutes the assigned variables; unassigned ones remain.
  Polynomial substitute(const Assignment& values) const;

  std::string str(char prefix = 'z') const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

}  // namespace vbraid

#endif  // VBRAID_POLYNOMIAL_HPP

#include "vbraid/rational_function.hpp"

#include <optional>
#include <utility>

#include "vbraid/errors.hpp"

namespace vbraid {

namespace {

bool needs_parens_as_numerator(const Polynomial& p) { return p.size() > 1; }

bool needs_parens_as_denominator(const Polynomial& p) {
  if (p.size() > 1) return true;
  const Term& t = p.terms().front();
  if (t.monomial.is_one()) return !t.coefficient.is_integer();
  return !t.coefficient.is_one() || t.monomial.factors().size() > 1;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

namespace {

/// (c, m) with a = c m b, if a is a monomial multiple of b. Monomial
/// multiplication preserves the term order, so terms line up by position.
std::optional<std::pair<Rational, Monomial>> monomial_multiple(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size() || b.is_zero()) return std::nullopt;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  if (!bt.front().monomial.divides(at.front().monomial)) return std::nullopt;
  const Monomial m = bt.front().monomial.quotient_of(at.front().monomial);
  const Rational c = at.front().coefficient / bt.front().coefficient;
  for (std::size_t i = 1; i < at.size(); ++i) {
    if (!(at[i].monomial == bt[i].monomial * m) || !(at[i].coefficient == c * bt[i].coefficient)) return std::nullopt;
  }
  return std::pair{c, m};
}

}  // namespace

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }

  const Monomial common = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!common.is_one()) {
    num_ = num_.divide_by(common);
    den_ = den_.divide_by(common);
  }

  // Clear coefficient denominators, then divide out the joint numerator gcd.
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const Polynomial* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      const mpq_class& q = t.coefficient.gmp();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  for (const Polynomial* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      mpz_class scaled = t.coefficient.gmp().get_num() * (lcm_den / t.coefficient.gmp().get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  mpq_class scale(lcm_den, gcd_num);
  if (den_.leading_coefficient().sign() < 0) scale = -scale;
  if (scale != 1) {
    const Rational s{mpq_class(scale)};
    num_ *= s;
    den_ *= s;
  }

  // num = c m den collapses to c m, den = c m num to 1/(c m).
  if (den_.is_constant()) return;
  if (const auto r = monomial_multiple(num_, den_)) {
    num_ = Polynomial(r->second, Rational(r->first.numerator()));
    den_ = Polynomial(Rational(r->first.denominator()));
  } else if (const auto r = monomial_multiple(den_, num_)) {
    Rational n(r->first.denominator());
    Rational d(r->first.numerator());
    if (d.sign() < 0) {
      n = -n;
      d = -d;
    }
    num_ = Polynomial(std::move(n));
    den_ = Polynomial(r->second, std::move(d));
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw KindMismatch("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::inv() const {
  if (num_.is_zero()) throw DivisionByZero();
  return RationalFunction(Raw{}, den_, num_);
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RationalFunction(Raw{}, num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::substitute(const Assignment& values) const {
  Polynomial num = num_.substitute(values);
  Polynomial den = den_.substitute(values);
  if (den.is_zero()) throw SingularPoint("denominator vanishes under substitution");
  return RationalFunction(Raw{}, std::move(num), std::move(den));
}

std::string RationalFunction::str(char prefix) const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str(prefix);
  std::string out;
  const bool pn = needs_parens_as_numerator(num_);
  const bool pd = needs_parens_as_denominator(den_);
  out += pn ? "(" + num_.str(prefix) + ")" : num_.str(prefix);
  out += '/';
  out += pd ? "(" + den_.str(prefix) + ")" : den_.str(prefix);
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(RationalFunction::Raw{}, a.num_ + b.num_, a.den_);
  return RationalFunction(RationalFunction::Raw{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(RationalFunction::Raw{}, a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return RationalFunction();
  return RationalFunction(RationalFunction::Raw{}, a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  if (f.identical(g)) return true;
  return f.num_ * g.den_ == g.num_ * f.den_;
}

}  // namespace vbraid

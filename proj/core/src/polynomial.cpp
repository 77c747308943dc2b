#include "vbraid/polynomial.hpp"

#include <algorithm>

#include "vbraid/errors.hpp"

namespace vbraid {

Monomial::Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> factors) {
  for (const auto& [v, e] : factors) {
    if (v == 0) throw IndexOutOfRange("variable indices are 1-based");
    if (exps_.size() < v) exps_.resize(v, 0);
    exps_[v - 1] += e;
    degree_ += e;
  }
  trim();
}

Monomial Monomial::variable(Var v, std::uint32_t exponent) { return Monomial{{v, exponent}}; }

std::vector<std::pair<Var, std::uint32_t>> Monomial::factors() const {
  std::vector<std::pair<Var, std::uint32_t>> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.emplace_back(static_cast<Var>(i + 1), exps_[i]);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  const auto& longer = exps_.size() >= rhs.exps_.size() ? exps_ : rhs.exps_;
  const auto& shorter = exps_.size() >= rhs.exps_.size() ? rhs.exps_ : exps_;
  out.exps_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.exps_[i] += shorter[i];
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  out.degree_ = other.degree_ - degree_;
  out.trim();
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  out.exps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  out.trim();
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out = *this;
  if (v >= 1 && v <= out.exps_.size()) {
    out.degree_ -= out.exps_[v - 1];
    out.exps_[v - 1] = 0;
    out.trim();
  }
  return out;
}

std::string Monomial::str(char prefix) const {
  std::string out;
  for (const auto& [v, e] : factors()) {
    if (!out.empty()) out += '*';
    out += prefix;
    out += std::to_string(v);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::strong_ordering term_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const Var n = std::max(a.max_variable(), b.max_variable());
  for (Var v = 1; v <= n; ++v) {
    const auto ea = a.exponent(v);
    const auto eb = b.exponent(v);
    // Larger exponent on a lower index sorts first.
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial(), constant});
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return term_order(a.monomial, b.monomial) < 0; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
  return Polynomial(std::move(merged));
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw KindMismatch("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.back().coefficient;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().monomial.degree();
}

Var Polynomial::max_variable() const {
  Var v = 0;
  for (const auto& t : terms_) v = std::max(v, t.monomial.max_variable());
  return v;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().monomial;
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].monomial);
  return g;
}

Polynomial Polynomial::divide_by(const Monomial& m) const {
  if (m.is_one()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.monomial)) throw KindMismatch("monomial does not divide polynomial");
    out.push_back(Term{m.quotient_of(t.monomial), t.coefficient});
  }
  // Dividing every term by the same monomial preserves term order.
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const Assignment& values) const {
  if (values.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    Monomial rest = t.monomial;
    for (const auto& [v, value] : values) {
      const auto e = t.monomial.exponent(v);
      if (e == 0) continue;
      c *= value.pow(static_cast<int>(e));
      rest = rest.without(v);
    }
    out.push_back(Term{std::move(rest), std::move(c)});
  }
  return from_terms(std::move(out));
}

std::string Polynomial::str(char prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient.sign() < 0;
    const Rational magnitude = negative ? -t.coefficient : t.coefficient;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (t.monomial.is_one()) {
      out += magnitude.str();
    } else if (magnitude.is_one()) {
      out += t.monomial.str(prefix);
    } else {
      out += magnitude.str();
      out += '*';
      out += t.monomial.str(prefix);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(std::move(out));
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(Term{b[j].monomial, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
      continue;
    }
    const auto c = term_order(a[i].monomial, b[j].monomial);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(Term{b[j].monomial, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Rational sum = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!sum.is_zero()) out.push_back(Term{a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial(merge_terms(a.terms_, b.terms_, false)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial(merge_terms(a.terms_, b.terms_, true)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b * a.terms_.front().coefficient;
  if (b.is_constant()) return a * b.terms_.front().coefficient;
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      out.push_back(Term{ta.monomial * tb.monomial, ta.coefficient * tb.coefficient});
    }
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace vbraid

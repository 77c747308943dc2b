#ifndef VBRAID_CLUSTER_HPP
#define VBRAID_CLUSTER_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbraid/errors.hpp"
#include "vbraid/field_value.hpp"

namespace vbraid {

/// Antisymmetric integer matrix, indexed from 1.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// Zero matrix on n vertices.
  explicit ExchangeMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  /// Throws InvalidExchangeMatrix unless square, antisymmetric, zero diagonal.
  explicit ExchangeMatrix(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  std::vector<std::vector<int>> rows() const;

  /// Matrix mutation in direction k:
  ///   b'_ij = -b_ij                                   if i = k or j = k,
  ///   b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2    otherwise.
  ExchangeMatrix mutate(std::size_t k) const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
};

bool is_antisymmetric(const std::vector<std::vector<int>>& rows);

/// Cluster seed (x, B).
struct Seed {
  std::vector<FieldValue> x;
  ExchangeMatrix B;

  /// Throws ArityMismatch or DivisionByZero on a broken invariant.
  void validate() const;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Seed in y-variables (y, B).
struct YSeed {
  std::vector<FieldValue> y;
  ExchangeMatrix B;

  void validate() const;
  friend bool operator==(const YSeed&, const YSeed&) = default;
};

/// x'_k = (prod_{b_jk>0} x_j^{b_jk} + prod_{b_jk<0} x_j^{-b_jk}) / x_k,
/// other x unchanged, B mutated. IndexOutOfRange for k outside 1..N,
/// DivisionByZero if x_k = 0, SingularPoint if x'_k vanishes.
Seed mutate_x(const Seed& seed, std::size_t k);

/// y'_k = 1/y_k; for i != k, y'_i = y_i (1 + 1/y_k)^{-b_ki} when b_ki >= 0 and
/// y_i (1 + y_k)^{-b_ki} otherwise. SingularPoint when y_k = 0, or when
/// y_k = -1 and vertex k has any neighbour.
YSeed mutate_y(const YSeed& seed, std::size_t k);

/// y_j = prod_k x_k^{b_kj}.
std::vector<FieldValue> y_from_x(const Seed& seed);

/// Exchange matrix of the quiver on 3n+1 vertices: a chain of n diamonds
/// (3i-2, 3i-1, 3i, 3i+1) sharing corner vertices, each oriented
/// 3i-2 -> 3i-1 -> 3i+1 -> 3i -> 3i-2. Throws InvalidStrandCount for n < 2.
ExchangeMatrix build_quiver(int n);

/// Parses "7,4,2" into 1-based vertex indices.
/// SyntaxError on malformed text, IndexOutOfRange on 0.
std::vector<std::size_t> parse_mutation_script(std::string_view text);

// Seed JSON: {"n_vertices": N, "x": ["p/q" | expression, ...], "B": [[int, ...], ...]}.
// A YSeed uses the key "y" (reading falls back to "x").
nlohmann::json seed_to_json(const Seed& seed);
Seed seed_from_json(const nlohmann::json& j);
nlohmann::json yseed_to_json(const YSeed& seed);
YSeed yseed_from_json(const nlohmann::json& j);

namespace detail {

template <FieldElement T>
T checked_div(const T& num, const T& den, const char* what) {
  if (is_zero(den)) throw SingularPoint(std::string("vanishing denominator in ") + what);
  return num / den;
}

}  // namespace detail

/// The n = 2 R-operator in x-variables, as a composition of mutations.
template <FieldElement T>
std::array<T, 7> phi_n2(const std::array<T, 7>& x) {
  const auto& [x1, x2, x3, x4, x5, x6, x7] = x;
  const T a = x1 * x3 * x5 + x3 * x4 * x5 + x1 * x2 * x6;
  const T b = x1 * x3 * x4 * x5 + x3 * x4 * x4 * x5 + x1 * x3 * x5 * x7 + x3 * x4 * x5 * x7 + x1 * x2 * x6 * x7;
  const T c = x2 * x6 * x7 + x3 * x4 * x5 + x3 * x5 * x7;
  return {x1,
          x5,
          detail::checked_div(a, x2 * x4, "Phi_3"),
          detail::checked_div(b, x2 * x4 * x6, "Phi_4"),
          detail::checked_div(c, x4 * x6, "Phi_5"),
          x3,
          x7};
}

/// Inverse of phi_n2.
template <FieldElement T>
std::array<T, 7> psi_n2(const std::array<T, 7>& x) {
  const auto& [x1, x2, x3, x4, x5, x6, x7] = x;
  const T a = x1 * x3 * x5 + x1 * x2 * x6 + x2 * x4 * x6;
  const T b = x1 * x2 * x4 * x6 + x2 * x4 * x4 * x6 + x1 * x3 * x5 * x7 + x1 * x2 * x6 * x7 + x2 * x4 * x6 * x7;
  const T c = x2 * x4 * x6 + x3 * x5 * x7 + x2 * x6 * x7;
  return {x1,
          detail::checked_div(a, x3 * x4, "Psi_2"),
          x6,
          detail::checked_div(b, x3 * x4 * x5, "Psi_4"),
          x2,
          detail::checked_div(c, x4 * x5, "Psi_6"),
          x7};
}

/// phi_n2 written in the y-variables y_j = prod_k x_k^{b_kj}.
template <FieldElement T>
std::array<T, 7> phi_y_n2(const std::array<T, 7>& y) {
  const auto& [y1, y2, y3, y4, y5, y6, y7] = y;
  const T one = constant_like(y1, Rational(1));
  const T left = one + y2 + y2 * y4;
  const T right = one + y6 + y4 * y6;
  const T d = one + y2 + y6 + y2 * y6 + y2 * y4 * y6;
  return {y1 * left,
          detail::checked_div(y2 * y4 * y5 * y6, d, "phi_2"),
          detail::checked_div(d, y2 * y4, "phi_3"),
          detail::checked_div(y4, left * right, "phi_4"),
          detail::checked_div(d, y4 * y6, "phi_5"),
          detail::checked_div(y2 * y3 * y4 * y6, d, "phi_6"),
          right * y7};
}

/// Inverse of phi_y_n2.
template <FieldElement T>
std::array<T, 7> psi_y_n2(const std::array<T, 7>& y) {
  const auto& [y1, y2, y3, y4, y5, y6, y7] = y;
  const T one = constant_like(y1, Rational(1));
  const T left = one + y4 + y3 * y4;
  const T right = one + y4 + y4 * y5;
  const T e = one + y4 + y3 * y4 + y4 * y5 + y3 * y4 * y5;
  return {detail::checked_div(y1 * y3 * y4, left, "psi_1"),
          detail::checked_div(y5, e, "psi_2"),
          e * y6,
          detail::checked_div(left * right, y3 * y4 * y5, "psi_4"),
          y2 * e,
          detail::checked_div(y3, e, "psi_6"),
          detail::checked_div(y4 * y5 * y7, right, "psi_7")};
}

}  // namespace vbraid

#endif  // VBRAID_CLUSTER_HPP
